#pragma once

#include <vector>

#include "cliffrad/clifford.hpp"
#include "cliffrad/mvpoly.hpp"

namespace cliffrad {

/// Gegenbauer polynomial C_k^lambda(t) by the three-term recurrence
///   C_0 = 1, C_1 = 2 lambda t,
///   k C_k = 2 (k + lambda - 1) t C_{k-1} - (k + 2 lambda - 2) C_{k-2}.
/// C_{-1} is taken to be 0.
template <typename T>
T gegenbauer(int k, double lambda, T t) {
  if (lambda <= 0.0) throw Error("gegenbauer: weight must be positive");
  if (k < 0) return T(0.0);
  T prev(1.0);
  if (k == 0) return prev;
  T cur = 2.0 * lambda * t;
  for (int n = 2; n <= k; ++n) {
    T next = (2.0 * (n + lambda - 1.0) * t * cur - (n + 2.0 * lambda - 2.0) * prev) / double(n);
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Power-basis coefficients c_0..c_k of C_k^lambda (same recurrence on
/// coefficient vectors).
std::vector<double> gegenbauer_coefficients(int k, double lambda);

/// beta_{2s,k} = -2s, beta_{2s+1,k} = -(2s + 2k + m); s >= 1.
double beta_coef(int s, int k, int m);

/// Z_k(a, b) as a polynomial in 2m variables: block 0 holds a, block 1 holds b.
/// Left monogenic in a, right monogenic in b.
MVPolynomial zonal_poly(int m, int k);

/// Z_{k,s}(a, b) = Z_{k-s}(a, b) / (beta_{s,k-s} ... beta_{1,k-s}).
MVPolynomial zonal_ks_poly(int m, int k, int s);

/// Truncated Fourier-Borel kernel sum_{k<=K} Z_k(a, b) in 2m variables.
MVPolynomial fourier_borel_poly(int m, int K);

/// Pointwise values at complex arguments.
Multivector zonal(int k, const CVector& u, const CVector& x);
Multivector zonal_ks(int k, int s, const CVector& u, const CVector& x);
Multivector fourier_borel(const CVector& u, const CVector& x, int K);

/// Concatenates (u, x) into a point of the two-block variable space.
CVector concat(const CVector& u, const CVector& x);

}  // namespace cliffrad
