#include <doctest.h>

#include "cliffrad/clifford.hpp"
#include "cliffrad/random.hpp"

using namespace cliffrad;

namespace {

Multivector e(int m, int j) { return Multivector::unit(m, j); }

Multivector blade(int m, std::initializer_list<int> idx, cplx c = 1.0) {
  const std::vector<int> v(idx);
  return Multivector::blade(m, Blade::from_indices(v, m), c);
}

const cplx I(0.0, 1.0);

}  // namespace

TEST_CASE("unit products follow e_i e_j + e_j e_i = -2 delta") {
  const int m = 3;
  CHECK(approx_equal(e(m, 1) * e(m, 1), Multivector::scalar(m, -1.0)));
  CHECK(approx_equal(e(m, 1) * e(m, 2), blade(m, {1, 2})));
  CHECK(approx_equal(e(m, 2) * e(m, 1), blade(m, {1, 2}, -1.0)));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      const Multivector anti = e(m, i) * e(m, j) + e(m, j) * e(m, i);
      CHECK(approx_equal(anti, Multivector::scalar(m, i == j ? -2.0 : 0.0)));
    }
}

TEST_CASE("null vector e1 + i e2") {
  const int m = 3;
  const Multivector tau = e(m, 1) + e(m, 2) * I;
  CHECK((tau * tau).max_abs() < 1e-15);
  const Multivector expected = Multivector::scalar(m, 2.0) + blade(m, {1, 2}, 2.0 * I);
  CHECK(approx_equal(tau * dagger(tau), expected));
}

TEST_CASE("geometric product is associative on all blades for m <= 4") {
  for (int m = 1; m <= 4; ++m) {
    const std::uint32_t n = 1u << m;
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t c = 0; c < n; ++c) {
          const auto A = Multivector::blade(m, Blade(a));
          const auto B = Multivector::blade(m, Blade(b));
          const auto C = Multivector::blade(m, Blade(c));
          REQUIRE(approx_equal((A * B) * C, A * (B * C), 0.0));
        }
  }
}

TEST_CASE("dimension mismatch is rejected") {
  CHECK_THROWS_AS(e(3, 1) * e(4, 1), Error);
  CHECK_THROWS_AS(e(3, 1) + e(4, 1), Error);
}

TEST_CASE("dagger examples and properties") {
  const int m = 4;
  CHECK(approx_equal(dagger(e(m, 1)), -e(m, 1)));
  CHECK(approx_equal(dagger(e(m, 2) * I), e(m, 2) * I));
  CHECK(approx_equal(dagger(e(m, 1) * e(m, 2)), blade(m, {1, 2}, -1.0)));

  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_multivector(m, rng);
    const auto b = random_multivector(m, rng);
    CHECK(approx_equal(dagger(dagger(a)), a));
    CHECK(max_abs_diff(dagger(a * b), dagger(b) * dagger(a)) < 1e-12);
  }
}

TEST_CASE("wedge and pairing") {
  const int m = 3;
  const CVector e1 = CVector::unit(m, 1), e2 = CVector::unit(m, 2);
  CHECK(approx_equal(wedge(e1, e2), blade(m, {1, 2})));
  CHECK(wedge(e1 + e2, e1 + e2).max_abs() == 0.0);
  CHECK(approx_equal(wedge(e1 + e2, e2), blade(m, {1, 2})));
  CHECK(pairing(e1, e1) == cplx(1.0));
  CHECK(pairing(CVector(std::vector<cplx>{1, 2, 0}), CVector(std::vector<cplx>{3, 0, 5})) == cplx(3.0));

  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const CVector x = random_real_vector(5, rng), y = random_real_vector(5, rng);
    const Multivector lhs = x.to_multivector() * y.to_multivector();
    const Multivector rhs = Multivector::scalar(5, -pairing(x, y)) + wedge(x, y);
    CHECK(max_abs_diff(lhs, rhs) < 1e-12);
    const Multivector half = (x.to_multivector() * y.to_multivector() -
                              y.to_multivector() * x.to_multivector()) * 0.5;
    CHECK(max_abs_diff(wedge(x, y), half) < 1e-12);
  }
}

TEST_CASE("null frame construction") {
  const int m = 3;
  const NullFrame f = make_null_frame({1, 0, 0}, {0, 1, 0});
  CHECK(approx_equal(f.tau() * f.tau_dagger(),
                     Multivector::scalar(m, 2.0) + blade(m, {1, 2}, 2.0 * I)));
  CHECK(approx_equal(f.tau_dagger(), -e(m, 1) + e(m, 2) * I));
  CHECK_THROWS_AS(make_null_frame({1, 0, 0}, {1, 0, 0}), Error);
  CHECK_THROWS_AS(make_null_frame({2, 0, 0}, {0, 1, 0}), Error);
  CHECK_THROWS_AS(make_null_frame({1, 0, 0}, {0, 1}), Error);
}

TEST_CASE("null frame identities hold for random frames") {
  Rng rng(3);
  for (int m = 3; m <= 6; ++m)
    for (int trial = 0; trial < 25; ++trial) {
      const NullFrame f = random_frame(m, rng);
      const auto& t = f.tau();
      const auto& td = f.tau_dagger();
      CHECK((t * t).max_abs() <= 1e-12);
      CHECK(max_abs_diff(t * td * t, t * 4.0) <= 1e-12);
      CHECK(max_abs_diff(td * t + t * td, Multivector::scalar(m, 4.0)) <= 1e-12);
      CHECK(max_abs_diff(td, dagger(t)) <= 1e-15);
    }
}
