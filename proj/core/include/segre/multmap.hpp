// Explicit models of P^2 factor cohomology with the coordinate-variable
// multiplication action, used for exact connecting-map ranks:
//   H^0(O(t))        monomials of degree t
//   H^0(Omega(t))    kernel of the Euler contraction inside H^0(O(t-1))^3
//   H^0(S^2Omega(t)) kernel of the three contractions inside H^0(O(t-2))^6
//   H^2(...)         Serre-dual models, multiplication = transpose
// H^1 groups are one-sided for every map we ever take ranks of, except
// H^1(S^2Omega(1)) -> H^1(S^2Omega(2)), which is not modeled and reported
// indeterminate if requested.
#pragma once

#include "segre/linalg.hpp"

namespace segre {

long long mono_dim(int t);                 // C(t+2,2) for t >= 0, else 0
MatQ mono_mult(int var, int t);            // z_var : mono(t) -> mono(t+1)

MatQ omega_h0_basis(int t);                // columns: basis of H^0(Omega(t)) in mono(t-1)^3
MatQ s2omega_h0_basis(int t);              // columns: basis in mono(t-2)^6, sym index (00,01,02,11,12,22)

// Solve B c = v column-by-column; requires solvability (v in span B).
MatQ coords_in_basis(const MatQ& basis, const MatQ& vectors);

// Model-coordinate matrix of z_var : H^p(S^lam Omega(t-1)) -> H^p(S^lam Omega(t)).
MatQ factor_mult(int lam, int t, int p, int var);

long long factor_model_dim(int lam, int t, int p);

}  // namespace segre
