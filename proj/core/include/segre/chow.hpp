// Intersection theory on P^2 x P^2: exact arithmetic in Q[h1,h2]/(h1^3,h2^3),
// Chern characters, Todd class, and Hirzebruch-Riemann-Roch chi.
// All coefficients are exact rationals; chi must come out an integer and a
// surviving denominator is treated as an engine bug.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "segre/bundles.hpp"

namespace segre {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

struct ChowClass {
    // coeff[i][j] multiplies h1^i h2^j, 0 <= i,j <= 2
    Rat c[3][3];

    ChowClass() = default;
    static ChowClass scalar(const Rat& r);

    ChowClass operator+(const ChowClass& o) const;
    ChowClass operator-(const ChowClass& o) const;
    ChowClass operator*(const ChowClass& o) const;  // truncated at h1^3 = h2^3 = 0
    ChowClass& operator+=(const ChowClass& o);
    bool operator==(const ChowClass& o) const;

    Rat degree() const { return c[2][2]; }  // degree map: coefficient of h1^2 h2^2
};

// One-variable truncated series a0 + a1 h + a2 h^2 for a single P^2 factor.
struct FactorSeries {
    Rat a[3];
};

FactorSeries factor_ch(const Factor& f);
ChowClass box_ch(const FactorSeries& l, const FactorSeries& r);

ChowClass ch(const BundleExpr& e);  // constructions: alternating sum over the declared sequence
ChowClass td_x();                   // td(P^2) box td(P^2), td(P^2) = 1 + (3/2)h + h^2

long long chi(const BundleExpr& e);
long long chi_sum(const SumExpr& e);

// 4! times the leading coefficient of the quartic t -> chi(O(t,t)), via exact
// finite differences; equals 6.
long long degree_of_x();

}  // namespace segre
