#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cliffrad/random.hpp"
#include "cliffrad/special.hpp"
#include "cliffrad/transforms.hpp"

using namespace cliffrad;

namespace {

// Residual of p against the span of <u,tau>^l tau C_m, degree by degree.
double planewave_span_residual(const MVPolynomial& p, const NullFrame& frame) {
  const int m = p.dim();
  const CVector tau = frame.tau_vector();
  double worst = 0.0;
  for (int l = 0; l <= std::max(p.degree(), 0); ++l) {
    const MVPolynomial part = homogeneous_part(p, l);
    MonoIndex lead;
    lead.set(0, l);
    const Multivector a = part.coeff(lead) * (1.0 / std::pow(tau[0], l));
    const MVPolynomial fit = MVPolynomial::linear_form_power(m, m, tau, l) * a;
    worst = std::max(worst, max_abs_diff(part, fit));
    worst = std::max(worst, max_abs_diff(frame.quarter_tau_tau_dagger() * a, a));
  }
  return worst;
}

}  // namespace

TEST_CASE("plane waves") {
  Rng rng(1);
  for (int m = 3; m <= 5; ++m) {
    const NullFrame fr = random_frame(m, rng);
    CHECK(max_abs_diff(planewave(fr, 0).realized, MVPolynomial::constant(m, m, fr.tau())) == 0.0);
    for (int k = 0; k <= 5; ++k) CHECK(dirac(planewave(fr, k).realized).max_abs() <= 1e-10);
  }
  CHECK_THROWS_AS(planewave(make_null_frame({1, 0}, {0, 1}), 1), Error);
}

TEST_CASE("plane-wave sphere norm") {
  Rng rng(2);
  for (int m = 3; m <= 5; ++m) {
    const NullFrame fr = random_frame(m, rng);
    for (int k = 0; k <= 4; ++k) {
      const MVPolynomial f = planewave(fr, k).realized;
      const Multivector norm = ml2_inner(f, f);
      CHECK(max_abs_diff(norm, planewave_norm(fr, k)) <= 1e-9);
      CHECK(max_abs_diff(norm, planewave_norm_printed(fr, k)) > 1e-3);
      // Distinct degrees are orthogonal.
      CHECK(ml2_inner(f, planewave(fr, k + 1).realized).max_abs() <= 1e-12);
    }
  }
}

TEST_CASE("Bargmann-Radon kernel coefficients") {
  CHECK(bargmann_lambda(0) == 0.25);
  CHECK(bargmann_lambda(1) == -0.125);
  CHECK(bargmann_lambda(2) == 1.0 / 32.0);
  CHECK(bargmann_lambda(3) == doctest::Approx(-1.0 / 192.0));
}

TEST_CASE("Bargmann-Radon kernel reproduces plane waves and is Hermitian") {
  Rng rng(3);
  for (int m = 3; m <= 5; ++m) {
    const NullFrame fr = random_frame(m, rng);
    for (int l = 0; l <= 4; ++l) {
      const MVPolynomial f = planewave(fr, l).realized;
      CHECK(max_abs_diff(bargmann_radon_integral(f, fr), f) <= 1e-9);
      CHECK(max_abs_diff(bargmann_radon_char(f, fr), f) <= 1e-9);
    }
    const MVPolynomial B = bargmann_radon_kernel(fr, 4);
    CHECK(max_abs_diff(swap_blocks(dagger(B), 0, 1), B) <= 1e-12);
  }
}

TEST_CASE("characterization form examples") {
  Rng rng(4);
  const int m = 4;
  const NullFrame fr = random_frame(m, rng);
  const Multivector c = random_multivector(m, rng);
  CHECK(max_abs_diff(radon_char(MVPolynomial::constant(m, m, c), fr),
                     MVPolynomial::constant(m, m, fr.quarter_tau_tau_dagger() * c)) <= 1e-14);

  const MVPolynomial x = MVPolynomial::vector_field(m, m);
  const MVPolynomial g = random_polynomial(m, 2, rng);
  CHECK(radon_char(x * x * g, fr).max_abs() <= 1e-12);
}

TEST_CASE("Bargmann-Radon: integral and characterization forms agree") {
  Rng rng(5);
  for (int m = 3; m <= 5; ++m)
    for (int trial = 0; trial < 4; ++trial) {
      const NullFrame fr = random_frame(m, rng);
      const MVPolynomial f = random_monogenic(m, 4, rng);
      const MVPolynomial a = bargmann_radon_integral(f, fr);
      const MVPolynomial b = bargmann_radon_char(f, fr);
      CHECK(max_abs_diff(a, b) <= 1e-9);
      CHECK(dirac(b).max_abs() <= 1e-9);
      CHECK(planewave_span_residual(b, fr) <= 1e-9);
      CHECK(max_abs_diff(bargmann_radon_integral(a, fr), a) <= 1e-9);
      const MVPolynomial g = random_monogenic(m, 4, rng);
      CHECK(max_abs_diff(mb_inner(a, g), mb_inner(f, bargmann_radon_integral(g, fr))) <= 1e-9);
    }
}

TEST_CASE("Gaussian inner product matches the Fischer product on monogenics") {
  Rng rng(6);
  const int m = 3;
  CHECK(approx_equal(mb_inner(MVPolynomial::constant(m, m, Multivector::scalar(m, 1.0)),
                              MVPolynomial::constant(m, m, Multivector::scalar(m, 1.0))),
                     Multivector::scalar(m, 1.0)));
  for (int k = 0; k <= 4; ++k) {
    const MVPolynomial f = random_spherical_monogenic(m, k, rng);
    const MVPolynomial g = random_spherical_monogenic(m, k, rng);
    CHECK(max_abs_diff(mb_inner(f, g), fischer_product(f, g)) <= 1e-9);
  }
  CHECK(std::abs(ml2_inner(MVPolynomial::constant(m, m, Multivector::scalar(m, 1.0)),
                           MVPolynomial::constant(m, m, Multivector::scalar(m, 1.0)))
                     .scalar_part() -
                 sphere_area(m)) <= 1e-12);
}

TEST_CASE("Szego kernel values") {
  Rng rng(7);
  for (int m = 3; m <= 5; ++m) {
    const CVector w = random_real_vector(m, rng);
    const Multivector s0 = szego_kernel(CVector::zeros(m), w);
    CHECK(max_abs_diff(s0, Multivector::scalar(m, 1.0 / sphere_area(m))) <= 1e-15);
  }
  CHECK_THROWS_AS(szego_kernel(CVector::unit(3, 1), CVector::unit(3, 1)), Error);
  CHECK(szego_series_coefficient(3, 0, SeriesForm::closed) == doctest::Approx(1.0 / sphere_area(3)));
}

TEST_CASE("Szego-Radon kernel lemma at interior points") {
  Rng rng(8);
  std::uniform_real_distribution<double> radius(0.0, 0.35);
  for (int m = 3; m <= 5; ++m) {
    const NullFrame fr = random_frame(m, rng);
    const MVPolynomial K6 = szego_radon_kernel(fr, 6);
    for (int pt = 0; pt < 50; ++pt) {
      CVector x = random_real_vector(m, rng), w = random_real_vector(m, rng);
      const double nx = std::sqrt(pairing(x, x).real()), nw = std::sqrt(pairing(w, w).real());
      x = (radius(rng) / nx) * x;
      w = (1.0 / nw) * w;
      const cplx lambda = pairing(x, fr.tau_vector());
      const Multivector closed =
          fr.quarter_tau_tau_dagger() * szego_kernel((-0.5 * lambda) * fr.tau_dagger_vector(), w);
      const cplx z = lambda * pairing(w, fr.tau_dagger_vector());
      cplx series = 0.0, zk = 1.0;
      for (int k = 0; k <= 120; ++k) {
        series += szego_series_coefficient(m, k, SeriesForm::closed) * zk;
        zk *= z;
      }
      CHECK(max_abs_diff(closed, fr.quarter_tau_tau_dagger() * series) <= 1e-9);
      if (std::abs(z) < 0.02) CHECK(max_abs_diff(closed, evaluate(K6, concat(x, w))) <= 1e-9);
    }
  }
}

TEST_CASE("Szego-Radon transform") {
  Rng rng(9);
  for (int m = 3; m <= 5; ++m) {
    const NullFrame fr = random_frame(m, rng);
    for (int l = 0; l <= 3; ++l) {
      const MVPolynomial f = planewave(fr, l).realized;
      CHECK(max_abs_diff(szego_radon_integral(f, fr), f) <= 1e-9);
    }
    const MVPolynomial K = szego_radon_kernel(fr, 3);
    CHECK(max_abs_diff(swap_blocks(dagger(K), 0, 1), K) <= 1e-12);
    for (int trial = 0; trial < 3; ++trial) {
      const MVPolynomial f = random_monogenic(m, 3, rng);
      CHECK(max_abs_diff(szego_radon_integral(f, fr), szego_radon_char(f, fr)) <= 1e-9);
    }
    // The printed series coefficients do not reproduce plane waves.
    const MVPolynomial f1 = planewave(fr, 1).realized;
    CHECK(max_abs_diff(szego_radon_integral(f1, fr, SeriesForm::printed), f1) > 1e-3);
  }
}

TEST_CASE("Szego-Radon transform of sigma <x,sigma>^l") {
  Rng rng(10);
  for (int m = 3; m <= 5; ++m) {
    const NullFrame fr = random_frame(m, rng);
    const NullFrame other = random_frame(m, rng);
    const CVector sigma = cplx(1.3, -0.4) * other.tau_vector();
    const Multivector sig = sigma.to_multivector();
    for (int l = 0; l <= 4; ++l) {
      const MVPolynomial g = MVPolynomial::linear_form_power(m, m, sigma, l) * sig;
      const cplx c = -0.5 * pairing(fr.tau_dagger_vector(), sigma);
      const MVPolynomial expected =
          (fr.quarter_tau_tau_dagger() * sig) * MVPolynomial::linear_form_power(m, m, fr.tau_vector(), l) *
          std::pow(c, l);
      CHECK(max_abs_diff(szego_radon_char(g, fr), expected) <= 1e-12 * (1 + expected.max_abs()));
      CHECK(max_abs_diff(szego_radon_integral(g, fr), expected) <= 1e-9 * (1 + expected.max_abs()));
    }
  }
}

TEST_CASE("Theta operator") {
  Rng rng(11);
  for (int m = 3; m <= 5; ++m) {
    CHECK(theta_factor_count(m, ThetaMode::printed) == m - 1);
    CHECK(theta_factor_count(m, ThetaMode::derived) == m - 2);
    for (int k = 0; k <= 4; ++k) {
      const MVPolynomial P = random_spherical_monogenic(m, k, rng);
      const MVPolynomial g = P * dual_eigenvalue(m, k);
      CHECK(max_abs_diff(theta_invert(g, ThetaMode::derived), P) <= 1e-9 * (1 + P.max_abs()));
      CHECK(max_abs_diff(theta_invert(g, ThetaMode::printed), P * (m + k - 1.0)) <=
            1e-9 * (1 + P.max_abs()));
      CHECK(theta_multiplier(m, k, ThetaMode::derived) * dual_eigenvalue(m, k) == doctest::Approx(1.0));
    }
  }
  CHECK(theta_mode_from_string("printed") == ThetaMode::printed);
  CHECK(to_string(ThetaMode::derived) == "derived");
  CHECK_THROWS_AS(theta_mode_from_string("other"), Error);
}

TEST_CASE("dual transform of constants and eigenvalues") {
  const QuadratureSpec spec{50000, 42, true, 0};
  const int m = 3;
  const Multivector c = Multivector::unit(m, 2) + Multivector::scalar(m, 2.0);
  const auto avg = dual_of_radon(MVPolynomial::constant(m, m, c), spec);
  CHECK(within_stderr(avg.mean, avg.stderr_, MVPolynomial::constant(m, m, c * 0.5), 5.0, 1e-12));

  Rng rng(12);
  for (int k = 1; k <= 2; ++k) {
    const MVPolynomial P = random_spherical_monogenic(m, k, rng);
    const auto d = dual_of_radon(P, spec);
    CHECK(within_stderr(d.mean, d.stderr_, P * dual_eigenvalue(m, k), 5.0, 1e-12));
  }
  CHECK(dual_eigenvalue(3, 0) == 0.5);
}

TEST_CASE("monogenic part by integration") {
  const QuadratureSpec spec{50000, 42, true, 0};
  const int m = 3;
  const MVPolynomial z = MVPolynomial::vector_field(m, m);
  const auto zero = monogenic_part_integral(z * z, spec, ThetaMode::derived);
  CHECK(zero.value.max_abs() <= 1e-12);

  Rng rng(13);
  const MVPolynomial h = random_polynomial(m, 2, rng);
  const auto part = monogenic_part_integral(h, spec, ThetaMode::derived);
  CHECK(part.samples == spec.samples);
  CHECK(within_stderr(part.value, part.stderr_, monogenic_projection(h), 5.0, 1e-10));
}
