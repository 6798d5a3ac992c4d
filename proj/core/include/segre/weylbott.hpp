// Borel-Weil-Bott for GL3: cohomology of the irreducible homogeneous bundles
// on P^2 we use, and of line bundles on the full flag threefold.
//
// Conventions (pinned by tests, see tests/test_weylbott.cpp):
//   S^lam Omega(t) on P^2     <->  weight (t - lam, lam, 0)
//   O_F(a,b) on F = SL3/B     <->  weight (a + b, b, 0)
//   rho = (2,1,0)
// Dotted action: u = w + rho; a repeated entry means every cohomology group
// vanishes; otherwise sort u descending with ell inversions and the single
// nonzero group sits in degree ell with dimension weyl_dim(sort(u) - rho).
#pragma once

#include <array>
#include <cstdint>

#include "segre/bundles.hpp"

namespace segre {

using Weight = std::array<long long, 3>;
using Cohom3 = std::array<long long, 3>;
using Cohom4 = std::array<long long, 4>;

struct DottedWeyl {
    bool singular = false;
    Weight dominant{};  // valid iff !singular; strictly computed as sort(w+rho)-rho
    int length = 0;     // inversion count of w+rho w.r.t. descending order
};

DottedWeyl dotted_weyl(const Weight& w);

// Product formula for GL3: (w1-w2+1)(w2-w3+1)(w1-w3+2)/2.  Requires w1>=w2>=w3.
long long weyl_dim(const Weight& w);

struct BottOutcome {
    bool acyclic = true;
    int degree = 0;      // valid iff !acyclic
    long long dim = 0;   // >= 1 iff !acyclic
};

BottOutcome bott_p2(const Factor& f);
Cohom3 cohomology_p2(const Factor& f);

BottOutcome bott_flag_line(int a, int b);
Cohom4 cohomology_flag_line(int a, int b);

}  // namespace segre
