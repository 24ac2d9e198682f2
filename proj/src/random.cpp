#include "cliffrad/random.hpp"

#include <cmath>

namespace cliffrad {

Multivector random_multivector(int m, Rng& rng, int grade) {
  std::normal_distribution<double> normal;
  Multivector out(m);
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    const Blade b(mask);
    if (grade >= 0 && b.grade() != grade) continue;
    const double re = normal(rng);
    const double im = normal(rng);
    out.add_term(b, cplx(re, im));
  }
  return out;
}

CVector random_real_vector(int m, Rng& rng) {
  std::normal_distribution<double> normal;
  CVector v = CVector::zeros(m);
  for (int j = 0; j < m; ++j) v[j] = normal(rng);
  return v;
}

NullFrame random_frame(int m, Rng& rng) {
  std::normal_distribution<double> normal;
  for (;;) {
    std::vector<double> t(static_cast<std::size_t>(m)), s(static_cast<std::size_t>(m));
    for (auto& v : t) v = normal(rng);
    for (auto& v : s) v = normal(rng);
    double tt = 0;
    for (double v : t) tt += v * v;
    for (auto& v : t) v /= std::sqrt(tt);
    double ts = 0;
    for (std::size_t j = 0; j < t.size(); ++j) ts += t[j] * s[j];
    for (std::size_t j = 0; j < t.size(); ++j) s[j] -= ts * t[j];
    double ss = 0;
    for (double v : s) ss += v * v;
    if (ss < 1e-12) continue;
    for (auto& v : s) v /= std::sqrt(ss);
    return make_null_frame(std::move(t), std::move(s));
  }
}

MVPolynomial random_homogeneous(int m, int k, Rng& rng) {
  MVPolynomial out(m);
  std::vector<int> e(static_cast<std::size_t>(m), 0);
  auto rec = [&](auto& self, int pos, int left) -> void {
    if (pos == m - 1) {
      e[static_cast<std::size_t>(pos)] = left;
      out.add_term(MonoIndex(e), random_multivector(m, rng));
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, k);
  return out;
}

MVPolynomial random_polynomial(int m, int max_degree, Rng& rng) {
  MVPolynomial out(m);
  for (int d = 0; d <= max_degree; ++d) out += random_homogeneous(m, d, rng);
  return out;
}

MVPolynomial random_spherical_monogenic(int m, int k, Rng& rng) {
  return monogenic_projection(random_homogeneous(m, k, rng));
}

MVPolynomial random_monogenic(int m, int max_degree, Rng& rng) {
  MVPolynomial out(m);
  for (int d = 0; d <= max_degree; ++d) out += random_spherical_monogenic(m, d, rng);
  return out;
}

}  // namespace cliffrad
