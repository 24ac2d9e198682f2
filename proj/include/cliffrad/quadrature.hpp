#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cliffrad/clifford.hpp"
#include "cliffrad/mvpoly.hpp"

namespace cliffrad {

enum class Measure {
  gaussian,  ///< (2 pi)^{-m/2} e^{-|x|^2/2} dx on R^m
  sphere,    ///< surface measure dS on S^{m-1} (unnormalized)
};

/// (n-1)!! for even moments; (-1)!! = 1.
double double_factorial(int n);

/// (2 pi)^{-m/2} int e^{-|x|^2/2} x^alpha dx over the first `count` variables.
double gaussian_moment(const MonoIndex& alpha, int offset, int count);
inline double gaussian_moment(const MonoIndex& alpha, int m) { return gaussian_moment(alpha, 0, m); }

/// int_{S^{m-1}} w^alpha dS(w) = 2 prod Gamma(b_j) / Gamma(sum b_j), b_j = (alpha_j + 1)/2.
double sphere_moment(const MonoIndex& alpha, int offset, int count);
inline double sphere_moment(const MonoIndex& alpha, int m) { return sphere_moment(alpha, 0, m); }

/// A_m = 2 pi^{m/2} / Gamma(m/2).
double sphere_area(int m);

double moment(Measure mu, const MonoIndex& alpha, int offset, int count);
/// Same, from plain exponents (sums of two stored monomials may exceed the degree cap).
double moment(Measure mu, std::span<const int> alpha);

/// Integrates every variable of a single-block polynomial.
Multivector gaussian_integrate(const MVPolynomial& p);
Multivector sphere_integrate(const MVPolynomial& p);

/// Integrates out the variables of `block`; the remaining blocks stay.
MVPolynomial integrate_block(const MVPolynomial& p, int block, Measure mu);

/// int K(..., x) f(x) dmu(x) where x is the kernel's `block` and f is a
/// single-block polynomial. The kernel coefficient stays on the left. The
/// integrated block is dropped from the variable set when it is the last one.
MVPolynomial pair_block(const MVPolynomial& kernel, int block, const MVPolynomial& f, Measure mu);

struct QuadratureSpec {
  std::uint64_t samples = 200000;
  std::uint64_t seed = 42;
  bool report_stderr = true;
  /// Worker threads for averaging; 0 uses the hardware concurrency.
  unsigned threads = 0;
};

/// Frame number `index` of the stream for `seed`; uniform on St(m, 2) and a
/// pure function of (m, seed, index).
NullFrame stiefel_frame(int m, std::uint64_t seed, std::uint64_t index);

std::vector<NullFrame> stiefel_sample(int m, const QuadratureSpec& spec);

struct StiefelAverage {
  MVPolynomial mean;
  /// Standard error of each coefficient; real and imaginary parts separately.
  MVPolynomial stderr_;
  std::uint64_t samples = 0;

  double max_stderr() const { return stderr_.max_abs(); }
};

using FrameFamily = std::function<MVPolynomial(const NullFrame&)>;

/// Monte-Carlo mean over uniform Stiefel frames, i.e. the normalized
/// (1/(A_m A_{m-1})) int int F(t + i s) dS(t) dS(s). The result is a pure
/// function of (family, m, spec): samples are processed in fixed chunks that
/// are reduced in chunk order whatever the thread count.
StiefelAverage stiefel_average(int m, const FrameFamily& family, const QuadratureSpec& spec);

using DenseFill = std::function<void(const NullFrame&, std::span<cplx>)>;

struct DenseStiefelAverage {
  std::vector<cplx> mean;
  /// Standard errors of the real and imaginary parts, packed as a complex number.
  std::vector<cplx> stderr_;
  std::uint64_t samples = 0;
};

/// Same contract as stiefel_average for families with a fixed layout: `fill`
/// adds each sample's value into a zeroed span of `slots` entries. It may be
/// called concurrently.
DenseStiefelAverage stiefel_average_dense(int m, std::size_t slots, const DenseFill& fill,
                                          const QuadratureSpec& spec);

/// True when |a - b| <= sigmas * stderr + abs_floor for every real and
/// imaginary coefficient; `worst` receives the largest (|a - b| - abs_floor) / stderr seen.
bool within_stderr(const MVPolynomial& estimate, const MVPolynomial& stderr_,
                   const MVPolynomial& expected, double sigmas, double abs_floor,
                   double* worst = nullptr);

}  // namespace cliffrad
