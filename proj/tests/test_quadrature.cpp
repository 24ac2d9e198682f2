#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cliffrad/quadrature.hpp"
#include "cliffrad/random.hpp"
#include "cliffrad/special.hpp"
#include "cliffrad/transforms.hpp"

using namespace cliffrad;

namespace {

MonoIndex mono(std::initializer_list<int> e) { return MonoIndex(std::vector<int>(e)); }

MVPolynomial sum_of_squares_power(int m, int l) {
  MVPolynomial q(m);
  q.add_term(mono({2}), Multivector::scalar(m, 1.0));
  MonoIndex b;
  b.set(1, 2);
  q.add_term(b, Multivector::scalar(m, 1.0));
  MVPolynomial p = MVPolynomial::constant(m, m, Multivector::scalar(m, 1.0));
  for (int i = 0; i < l; ++i) p = p * q;
  return p;
}

double mu_k(int m, int k) {
  const double sign = k % 2 == 0 ? 1.0 : -1.0;
  return std::ldexp(1.0, k + 1) * sign *
         std::exp(std::lgamma(m - 1.0) + 2 * std::lgamma(k + 1.0) - std::lgamma(m + k - 1.0));
}

}  // namespace

TEST_CASE("gaussian moments") {
  CHECK(gaussian_moment(MonoIndex{}, 4) == 1.0);
  CHECK(gaussian_moment(mono({2, 0, 0}), 3) == 1.0);
  CHECK(gaussian_moment(mono({4, 0, 0}), 3) == 3.0);
  CHECK(gaussian_moment(mono({1, 1, 0}), 3) == 0.0);
  CHECK(double_factorial(-1) == 1.0);
  CHECK(double_factorial(5) == 15.0);
  for (int m = 3; m <= 6; ++m)
    for (int l = 0; l <= 6; ++l) {
      const double expected = std::ldexp(1.0, l) * std::tgamma(l + 1.0);
      const Multivector v = gaussian_integrate(sum_of_squares_power(m, l));
      CHECK(std::abs(v.scalar_part() - expected) <= 1e-12 * expected);
    }
  MVPolynomial odd(3);
  odd.add_term(mono({1, 1, 0}), Multivector::blade(3, Blade(0b011)));
  CHECK(gaussian_integrate(odd).is_zero());
  CHECK(gaussian_integrate(sum_of_squares_power(3, 2)).scalar_part().real() == doctest::Approx(8.0));
}

TEST_CASE("sphere moments") {
  for (int m = 2; m <= 7; ++m)
    CHECK(sphere_moment(MonoIndex{}, m) ==
          doctest::Approx(2 * std::pow(std::numbers::pi, m / 2.0) / std::tgamma(m / 2.0)).epsilon(1e-14));
  CHECK(sphere_moment(mono({2, 0, 0}), 3) == doctest::Approx(4 * std::numbers::pi / 3).epsilon(1e-14));
  for (int m = 3; m <= 6; ++m) {
    MVPolynomial r2(m);
    for (int j = 0; j < m; ++j) {
      MonoIndex a;
      a.set(j, 2);
      r2.add_term(a, Multivector::scalar(m, 1.0));
    }
    CHECK(sphere_integrate(r2).scalar_part().real() == doctest::Approx(sphere_area(m)).epsilon(1e-13));
    for (int k = 0; k <= 5; ++k) {
      const double expected =
          2 * std::pow(std::numbers::pi, m / 2.0) * std::tgamma(k + 1.0) / std::tgamma(m / 2.0 + k);
      CHECK(sphere_integrate(sum_of_squares_power(m, k)).scalar_part().real() ==
            doctest::Approx(expected).epsilon(1e-13));
    }
  }
  MVPolynomial lin(3);
  lin.add_term(mono({1, 0, 0}), Multivector::unit(3, 1));
  CHECK(sphere_integrate(lin).is_zero());
}

TEST_CASE("exact moments agree with plain Monte Carlo") {
  Rng rng(2024);
  std::normal_distribution<double> normal;
  std::uniform_int_distribution<int> expo(0, 3);
  const int n = 1'000'000;
  int checked = 0;
  for (int m = 3; m <= 4; ++m) {
    std::vector<std::vector<double>> pts(static_cast<std::size_t>(n), std::vector<double>(m));
    for (auto& p : pts)
      for (auto& v : p) v = normal(rng);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<int> a(static_cast<std::size_t>(m));
      int deg = 0;
      do {
        deg = 0;
        for (auto& v : a) deg += v = expo(rng);
      } while (deg > 6);
      for (const Measure mu : {Measure::gaussian, Measure::sphere}) {
        double sum = 0.0, sq = 0.0;
        for (const auto& p : pts) {
          double r = 0.0;
          for (double v : p) r += v * v;
          const double scale = mu == Measure::sphere ? 1.0 / std::sqrt(r) : 1.0;
          double val = mu == Measure::sphere ? sphere_area(m) : 1.0;
          for (int j = 0; j < m; ++j) val *= std::pow(p[static_cast<std::size_t>(j)] * scale, a[static_cast<std::size_t>(j)]);
          sum += val;
          sq += val * val;
        }
        const double mean = sum / n;
        const double se = std::sqrt(std::max(0.0, sq / n - mean * mean) / n);
        const double exact = moment(mu, MonoIndex(a), 0, m);
        CHECK(std::abs(mean - exact) <= 5 * se + 1e-12);
        ++checked;
      }
    }
  }
  CHECK(checked == 40);
}

TEST_CASE("integrate_block and pair_block") {
  const int m = 3;
  Rng rng(8);
  const MVPolynomial f = random_polynomial(m, 3, rng);
  const MVPolynomial g = random_polynomial(m, 2, rng);
  // Integrating the x block of f(u) g(x) leaves f(u) * E[g].
  const MVPolynomial prod = embed(f, 2 * m, 0) * embed(g, 2 * m, m);
  const MVPolynomial lhs = integrate_block(prod, 1, Measure::gaussian);
  const MVPolynomial rhs = f * gaussian_integrate(g);
  CHECK(max_abs_diff(truncate_vars(lhs, m), rhs) < 1e-12);

  const MVPolynomial kernel = embed(f, 2 * m, m);
  const MVPolynomial paired = pair_block(kernel, 1, g, Measure::sphere);
  CHECK(paired.nvars() == m);
  CHECK(max_abs_diff(paired, MVPolynomial::constant(m, m, sphere_integrate(f * g))) < 1e-12);
}

TEST_CASE("Stiefel frames are valid and reproducible") {
  const QuadratureSpec spec{1000, 99, true, 0};
  const auto frames = stiefel_sample(4, spec);
  CHECK(frames.size() == 1000);
  const NullFrame f = stiefel_frame(4, 99, 517);
  CHECK(f.t() == frames[517].t());
  CHECK(f.s() == frames[517].s());
  CHECK(stiefel_frame(4, 100, 517).t() != f.t());
}

TEST_CASE("Stiefel sample means") {
  const int m = 4;
  const QuadratureSpec spec{100000, 42, true, 0};
  const double bound = 4.0 / std::sqrt(static_cast<double>(spec.samples));
  const auto mean_t = stiefel_average(
      m, [](const NullFrame& fr) { return MVPolynomial::constant(fr.dim(), fr.dim(), CVector(fr.t()).to_multivector()); },
      spec);
  CHECK(mean_t.mean.max_abs() <= bound);

  const auto q = stiefel_average(
      m,
      [](const NullFrame& fr) { return MVPolynomial::constant(fr.dim(), fr.dim(), fr.quarter_tau_tau_dagger()); },
      spec);
  const auto half = MVPolynomial::constant(m, m, Multivector::scalar(m, 0.5));
  CHECK(max_abs_diff(q.mean, half) <= bound);
  CHECK(within_stderr(q.mean, q.stderr_, half, 5.0, 1e-12));

  const auto c = stiefel_average(
      m, [](const NullFrame& fr) { return MVPolynomial::constant(fr.dim(), fr.dim(), Multivector::unit(fr.dim(), 2)); },
      spec);
  CHECK(max_abs_diff(c.mean, MVPolynomial::constant(m, m, Multivector::unit(m, 2))) <= 1e-15);
}

TEST_CASE("Stiefel averages do not depend on the thread count") {
  const int m = 3;
  auto family = [](const NullFrame& fr) {
    return MVPolynomial::linear_form_power(fr.dim(), fr.dim(), fr.tau_vector(), 2) * fr.tau();
  };
  QuadratureSpec one{20000, 7, true, 1};
  QuadratureSpec four{20000, 7, true, 4};
  const auto a = stiefel_average(m, family, one);
  const auto b = stiefel_average(m, family, four);
  CHECK(max_abs_diff(a.mean, b.mean) == 0.0);
  CHECK(max_abs_diff(a.stderr_, b.stderr_) == 0.0);
}

namespace {

// <z, x>^k with z in block 0 and x in block 1.
MVPolynomial pairing_power(int m, int k) {
  MVPolynomial dot(m, 2 * m);
  for (int i = 0; i < m; ++i) {
    MonoIndex a;
    a.set(i, 1);
    a.set(m + i, 1);
    dot.add_term(a, Multivector::scalar(m, 1.0));
  }
  MVPolynomial p = MVPolynomial::constant(m, 2 * m, Multivector::scalar(m, 1.0));
  for (int i = 0; i < k; ++i) p = p * dot;
  return p;
}

MVPolynomial zonal_integrand(const NullFrame& fr, int k) {
  const int m = fr.dim();
  const Multivector ttd = fr.quarter_tau_tau_dagger() * 4.0;
  return ttd * (MVPolynomial::linear_form_power(m, 2 * m, fr.tau_vector(), k, 0) *
                MVPolynomial::linear_form_power(m, 2 * m, fr.tau_dagger_vector(), k, 1));
}

}  // namespace

TEST_CASE("dense and generic Stiefel averages agree") {
  const int m = 3, k = 2;
  const QuadratureSpec spec{20000, 5, true, 0};
  const auto generic = stiefel_average(m, [](const NullFrame& fr) { return zonal_integrand(fr, 2); }, spec);
  // tau tau^dagger <u,tau>^k <x,tau^dagger>^k = 4 (-2)^k R_tau[<z,x>^k](u, x)
  const auto dense = dual_of_radon(pairing_power(m, k), spec);
  const double scale = 4.0 * std::pow(-2.0, k);
  CHECK(max_abs_diff(generic.mean, dense.mean * scale) <= 1e-12);
  CHECK(max_abs_diff(generic.stderr_, dense.stderr_ * std::abs(scale)) <= 1e-12);
}

TEST_CASE("Stiefel average of the zonal integrand") {
  for (int m = 3; m <= 4; ++m) {
    const QuadratureSpec spec{100000, 11, true, 0};
    for (int k = 0; k <= 3; ++k) {
      const double scale = 4.0 * std::pow(-2.0, k);
      const auto avg = dual_of_radon(pairing_power(m, k), spec);
      const MVPolynomial expected = zonal_poly(m, k) * mu_k(m, k);
      double worst = 0.0;
      CHECK(within_stderr(avg.mean * scale, avg.stderr_ * std::abs(scale), expected, 5.0, 1e-12, &worst));
    }
  }
}

TEST_CASE("sample count must be positive") {
  CHECK_THROWS_AS(stiefel_sample(3, QuadratureSpec{0, 1, true, 0}), Error);
}
