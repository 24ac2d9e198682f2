#include "cliffrad/special.hpp"

#include <cmath>

namespace cliffrad {

namespace {

void require_zonal_dim(int m) {
  if (m < 3) throw Error("zonal monogenics need m >= 3");
  if (2 * m > kMaxVars) throw Error("zonal monogenics need 2m <= " + std::to_string(kMaxVars));
}

MVPolynomial scalar_poly(int m, int nvars, double c) {
  return MVPolynomial::constant(m, nvars, Multivector::scalar(m, c));
}

MVPolynomial power(const MVPolynomial& p, int e) {
  MVPolynomial out = scalar_poly(p.dim(), p.nvars(), 1.0);
  for (int i = 0; i < e; ++i) out = out * p;
  return out;
}

// (|a||b|)^n C_n^lambda(<a,b>/(|a||b|)) with the radial factors cleared.
MVPolynomial homogenized_gegenbauer(int m, int n, double lambda) {
  const int nv = 2 * m;
  MVPolynomial out(m, nv);
  if (n < 0) return out;
  MVPolynomial inner(m, nv), norms_a(m, nv), norms_b(m, nv);
  for (int j = 0; j < m; ++j) {
    const auto a = MVPolynomial::variable(m, nv, j);
    const auto b = MVPolynomial::variable(m, nv, m + j);
    inner += a * b;
    norms_a += a * a;
    norms_b += b * b;
  }
  const MVPolynomial norms = norms_a * norms_b;
  const auto coeffs = gegenbauer_coefficients(n, lambda);
  for (int p = n; p >= 0; p -= 2) {
    const double c = coeffs[static_cast<std::size_t>(p)];
    if (c == 0.0) continue;
    out += (power(inner, p) * power(norms, (n - p) / 2)) * c;
  }
  return out;
}

}  // namespace

std::vector<double> gegenbauer_coefficients(int k, double lambda) {
  if (lambda <= 0.0) throw Error("gegenbauer: weight must be positive");
  std::vector<double> prev{1.0};
  if (k == 0) return prev;
  std::vector<double> cur{0.0, 2.0 * lambda};
  for (int n = 2; n <= k; ++n) {
    std::vector<double> next(static_cast<std::size_t>(n) + 1, 0.0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2.0 * (n + lambda - 1.0) * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= (n + 2.0 * lambda - 2.0) * prev[i];
    for (auto& c : next) c /= n;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

double beta_coef(int s, int k, int m) {
  if (s < 1) throw Error("beta_coef: index must be >= 1");
  if (s % 2 == 0) return -static_cast<double>(s);
  return -static_cast<double>((s - 1) + 2 * k + m);
}

MVPolynomial zonal_poly(int m, int k) {
  require_zonal_dim(m);
  if (k < 0) throw Error("zonal: degree must be non-negative");
  const int nv = 2 * m;
  const double md = m;
  const double pref =
      std::exp(std::lgamma(md / 2 - 1) - std::lgamma(md / 2 + k)) / std::ldexp(1.0, k + 1);

  MVPolynomial radial = homogenized_gegenbauer(m, k, md / 2 - 1) * (k + md - 2);

  MVPolynomial wedge_ab(m, nv);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const auto ai = MVPolynomial::variable(m, nv, i);
      const auto aj = MVPolynomial::variable(m, nv, j);
      const auto bi = MVPolynomial::variable(m, nv, m + i);
      const auto bj = MVPolynomial::variable(m, nv, m + j);
      wedge_ab += Multivector::blade(m, Blade((1u << i) | (1u << j))) * (ai * bj - aj * bi);
    }
  }
  MVPolynomial angular = (wedge_ab * homogenized_gegenbauer(m, k - 1, md / 2)) * (md - 2);
  return (radial + angular) * pref;
}

MVPolynomial zonal_ks_poly(int m, int k, int s) {
  if (s < 0 || s > k) throw Error("zonal_ks: need 0 <= s <= k");
  double denom = 1.0;
  for (int j = 1; j <= s; ++j) denom *= beta_coef(j, k - s, m);
  return zonal_poly(m, k - s) * (1.0 / denom);
}

MVPolynomial fourier_borel_poly(int m, int K) {
  require_zonal_dim(m);
  MVPolynomial out(m, 2 * m);
  for (int k = 0; k <= K; ++k) out += zonal_poly(m, k);
  return out;
}

CVector concat(const CVector& u, const CVector& x) {
  std::vector<cplx> z(u.components().begin(), u.components().end());
  z.insert(z.end(), x.components().begin(), x.components().end());
  return CVector(std::move(z));
}

Multivector zonal(int k, const CVector& u, const CVector& x) {
  if (u.dim() != x.dim()) throw Error("zonal: dimension mismatch");
  return evaluate(zonal_poly(u.dim(), k), concat(u, x));
}

Multivector zonal_ks(int k, int s, const CVector& u, const CVector& x) {
  if (u.dim() != x.dim()) throw Error("zonal_ks: dimension mismatch");
  return evaluate(zonal_ks_poly(u.dim(), k, s), concat(u, x));
}

Multivector fourier_borel(const CVector& u, const CVector& x, int K) {
  if (u.dim() != x.dim()) throw Error("fourier_borel: dimension mismatch");
  return evaluate(fourier_borel_poly(u.dim(), K), concat(u, x));
}

}  // namespace cliffrad
