#pragma once

#include <random>

#include "cliffrad/clifford.hpp"
#include "cliffrad/mvpoly.hpp"

namespace cliffrad {

using Rng = std::mt19937_64;

/// Dense multivector with independent N(0,1) real and imaginary parts; `grades`
/// restricts the blades (-1 = all).
Multivector random_multivector(int m, Rng& rng, int grade = -1);

CVector random_real_vector(int m, Rng& rng);

/// Uniform orthonormal frame drawn from rng (not the counter-based stream).
NullFrame random_frame(int m, Rng& rng);

/// Homogeneous polynomial of degree k in m variables with random coefficients
/// on every monomial.
MVPolynomial random_homogeneous(int m, int k, Rng& rng);

/// Random polynomial with components of every degree 0..max_degree.
MVPolynomial random_polynomial(int m, int max_degree, Rng& rng);

/// Monogenic part of a random homogeneous polynomial: a generic spherical monogenic.
MVPolynomial random_spherical_monogenic(int m, int k, Rng& rng);

/// Sum of random spherical monogenics of degrees 0..max_degree.
MVPolynomial random_monogenic(int m, int max_degree, Rng& rng);

}  // namespace cliffrad
