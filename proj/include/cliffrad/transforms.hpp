#pragma once

#include <cstdint>
#include <string_view>

#include "cliffrad/clifford.hpp"
#include "cliffrad/mvpoly.hpp"
#include "cliffrad/quadrature.hpp"

namespace cliffrad {

/// Monogenic plane wave <x, tau>^k tau.
struct PlaneWave {
  NullFrame frame;
  int degree = 0;
  MVPolynomial realized;
};

PlaneWave planewave(const NullFrame& frame, int k);

// ---------------------------------------------------------------------------
// Bargmann-Radon side. Two-block kernels K(u, x) keep u in block 0 and x in
// block 1; transforms return single-block polynomials in u.
// ---------------------------------------------------------------------------

/// lambda_l = (-1)^l / (l! 4 2^l).
double bargmann_lambda(int l);

/// sum_{l<=K} lambda_l <u,tau>^l tau tau^dagger <x,tau^dagger>^l, which is
/// (tau tau^dagger / 4) exp(-<u,tau><x,tau^dagger>/2) truncated at degree K in x.
MVPolynomial bargmann_radon_kernel(const NullFrame& frame, int K);

/// (tau tau^dagger / 4) f(-tau^dagger <u,tau> / 2), substituting into `block` of f.
/// Shared by both transforms.
MVPolynomial radon_char(const MVPolynomial& f, const NullFrame& frame, int block = 0);

inline MVPolynomial bargmann_radon_char(const MVPolynomial& f, const NullFrame& frame) {
  return radon_char(f, frame);
}

/// (2 pi)^{-m/2} int e^{-|x|^2/2} B_tau(u, x) f(x) dx, exact; the kernel is
/// truncated at deg f.
MVPolynomial bargmann_radon_integral(const MVPolynomial& f, const NullFrame& frame);

// ---------------------------------------------------------------------------
// Szego-Radon side.
// ---------------------------------------------------------------------------

/// S(z, w) = (1/A_m) (1 + z w) / (1 + <z,z><w,w> - 2<z,w>)^{m/2} at complex z.
/// Throws when the base of the power vanishes.
Multivector szego_kernel(const CVector& z, const CVector& w);

enum class SeriesForm {
  closed,   ///< binomial expansion of (1 + <x,tau><y,tau^dagger>)^{-m/2} / A_m
  printed,  ///< Gamma(m/2+k) / (2^{m/2} Gamma(k+1)), as originally published
};

/// Coefficient c_k of <x,tau>^k <y,tau^dagger>^k (without the tau tau^dagger/4 factor).
double szego_series_coefficient(int m, int k, SeriesForm form);

MVPolynomial szego_radon_kernel(const NullFrame& frame, int K, SeriesForm form = SeriesForm::closed);

inline MVPolynomial szego_radon_char(const MVPolynomial& f, const NullFrame& frame) {
  return radon_char(f, frame);
}

/// int_{S^{m-1}} K_tau(u, w) f(w) dS(w), exact; f must be harmonic for the
/// truncation at deg f to be exact.
MVPolynomial szego_radon_integral(const MVPolynomial& f, const NullFrame& frame,
                                  SeriesForm form = SeriesForm::closed);

/// Exact sphere norm tau^dagger tau 2 pi^{m/2} k! / Gamma(m/2 + k) of the plane wave.
Multivector planewave_norm(const NullFrame& frame, int k);
/// The published constant 2 pi^{m/2} tau tau^dagger Gamma(k+1) / Gamma(m/2+1).
Multivector planewave_norm_printed(const NullFrame& frame, int k);

// ---------------------------------------------------------------------------
// Dual transform and inversion.
// ---------------------------------------------------------------------------

/// Stiefel average of a frame-indexed family.
StiefelAverage dual_transform(int m, const FrameFamily& family, const QuadratureSpec& spec);

/// Dual transform of frame -> radon_char(f, frame, block), evaluated on a
/// precomputed dense layout.
StiefelAverage dual_of_radon(const MVPolynomial& f, const QuadratureSpec& spec, int block = 0);

/// (1/2) Gamma(m-1) Gamma(k+1) / Gamma(m+k-1): dual o R on degree-k spherical monogenics.
double dual_eigenvalue(int m, int k);

enum class ThetaMode {
  printed,  ///< m-1 factors (1-Gamma)...(m-1-Gamma)
  derived,  ///< m-2 factors, the exact inverse of dual o R
};

std::string_view to_string(ThetaMode mode);
ThetaMode theta_mode_from_string(std::string_view s);

int theta_factor_count(int m, ThetaMode mode);

/// Eigenvalue of Theta on a degree-k spherical monogenic: 2/(m-2)! prod_j (j + k).
double theta_multiplier(int m, int k, ThetaMode mode);

/// Theta = 2/(m-2)! prod_{j=1}^{n} (j - Gamma), applied literally via gamma_op.
MVPolynomial theta_invert(const MVPolynomial& g, ThetaMode mode, int block = 0);

struct MonogenicPart {
  MVPolynomial value;
  MVPolynomial stderr_;
  ThetaMode mode = ThetaMode::derived;
  std::uint64_t samples = 0;
};

/// Theta applied to the Stiefel average of (tau tau^dagger/4) h(-tau^dagger <u,tau>/2),
/// the variable block `block` of h being substituted. Every sample is monogenic
/// in u, so the standard errors are carried through Theta degree by degree.
MonogenicPart monogenic_part_integral(const MVPolynomial& h, const QuadratureSpec& spec,
                                      ThetaMode mode, int block = 0);

/// (2 pi)^{-m/2} int e^{-|x|^2/2} f^dagger g dx.
Multivector mb_inner(const MVPolynomial& f, const MVPolynomial& g);
/// int_{S^{m-1}} f^dagger g dS.
Multivector ml2_inner(const MVPolynomial& f, const MVPolynomial& g);

}  // namespace cliffrad
