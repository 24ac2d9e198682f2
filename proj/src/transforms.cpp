#include "cliffrad/transforms.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <string>

namespace cliffrad {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void require_transform_dim(int m) {
  if (m < 3) throw Error("transforms need m >= 3");
  if (2 * m > kMaxVars) throw Error("transforms need 2m <= " + std::to_string(kMaxVars));
}

// sum_{l<=K} c_l <u,tau>^l <x,tau^dagger>^l, u in block 0 and x in block 1.
MVPolynomial frame_series(const NullFrame& frame, int K, auto&& coefficient) {
  const int m = frame.dim();
  const int nv = 2 * m;
  const CVector tau = frame.tau_vector();
  const CVector tau_d = frame.tau_dagger_vector();
  MVPolynomial out(m, nv);
  for (int l = 0; l <= K; ++l) {
    const double c = coefficient(l);
    out += (MVPolynomial::linear_form_power(m, nv, tau, l, 0) *
            MVPolynomial::linear_form_power(m, nv, tau_d, l, 1)) *
           c;
  }
  return out;
}

}  // namespace

PlaneWave planewave(const NullFrame& frame, int k) {
  const int m = frame.dim();
  require_transform_dim(m);
  if (k < 0) throw Error("planewave: degree must be non-negative");
  MVPolynomial p = MVPolynomial::linear_form_power(m, m, frame.tau_vector(), k) * frame.tau();
  return PlaneWave{frame, k, std::move(p)};
}

double bargmann_lambda(int l) {
  const double sign = (l % 2 == 0) ? 1.0 : -1.0;
  return sign / (factorial(l) * 4.0 * std::ldexp(1.0, l));
}

MVPolynomial bargmann_radon_kernel(const NullFrame& frame, int K) {
  require_transform_dim(frame.dim());
  // lambda_l * tau tau^dagger = (tau tau^dagger / 4) * 4 lambda_l.
  const Multivector ttd = frame.quarter_tau_tau_dagger() * 4.0;
  return ttd * frame_series(frame, K, [](int l) { return bargmann_lambda(l); });
}

MVPolynomial radon_char(const MVPolynomial& f, const NullFrame& frame, int block) {
  if (f.dim() != frame.dim()) throw Error("radon_char: frame dimension differs from polynomial");
  require_transform_dim(f.dim());
  const CVector w = -0.5 * frame.tau_dagger_vector();
  return frame.quarter_tau_tau_dagger() * substitute_ray(f, w, frame.tau_vector(), block);
}

MVPolynomial bargmann_radon_integral(const MVPolynomial& f, const NullFrame& frame) {
  if (f.dim() != frame.dim() || f.nvars() != f.dim())
    throw Error("bargmann_radon_integral: expected a single-block polynomial matching the frame");
  const int K = std::max(f.degree(), 0);
  return pair_block(bargmann_radon_kernel(frame, K), 1, f, Measure::gaussian);
}

Multivector szego_kernel(const CVector& z, const CVector& w) {
  if (z.dim() != w.dim()) throw Error("szego_kernel: dimension mismatch");
  const int m = z.dim();
  const cplx base = 1.0 + pairing(z, z) * pairing(w, w) - 2.0 * pairing(z, w);
  if (std::abs(base) < 1e-14) throw Error("szego_kernel: vanishing denominator");
  const cplx denom = std::pow(base, m / 2.0);
  const Multivector num = Multivector::scalar(m, 1.0) + z.to_multivector() * w.to_multivector();
  return num * (1.0 / (sphere_area(m) * denom));
}

double szego_series_coefficient(int m, int k, SeriesForm form) {
  const double md = m;
  if (form == SeriesForm::printed)
    return std::exp(std::lgamma(md / 2 + k) - std::lgamma(k + 1.0)) / std::pow(2.0, md / 2);
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return sign * std::exp(std::lgamma(md / 2 + k) - std::lgamma(k + 1.0)) /
         (2.0 * std::pow(std::numbers::pi, md / 2));
}

MVPolynomial szego_radon_kernel(const NullFrame& frame, int K, SeriesForm form) {
  const int m = frame.dim();
  require_transform_dim(m);
  return frame.quarter_tau_tau_dagger() *
         frame_series(frame, K, [&](int k) { return szego_series_coefficient(m, k, form); });
}

MVPolynomial szego_radon_integral(const MVPolynomial& f, const NullFrame& frame, SeriesForm form) {
  if (f.dim() != frame.dim() || f.nvars() != f.dim())
    throw Error("szego_radon_integral: expected a single-block polynomial matching the frame");
  const int K = std::max(f.degree(), 0);
  return pair_block(szego_radon_kernel(frame, K, form), 1, f, Measure::sphere);
}

Multivector planewave_norm(const NullFrame& frame, int k) {
  const double md = frame.dim();
  const double c = 2.0 * std::pow(std::numbers::pi, md / 2) *
                   std::exp(std::lgamma(k + 1.0) - std::lgamma(md / 2 + k));
  return (frame.tau_dagger() * frame.tau()) * c;
}

Multivector planewave_norm_printed(const NullFrame& frame, int k) {
  const double md = frame.dim();
  const double c = 2.0 * std::pow(std::numbers::pi, md / 2) *
                   std::exp(std::lgamma(k + 1.0) - std::lgamma(md / 2 + 1));
  return (frame.tau() * frame.tau_dagger()) * c;
}

StiefelAverage dual_transform(int m, const FrameFamily& family, const QuadratureSpec& spec) {
  require_transform_dim(m);
  return stiefel_average(m, family, spec);
}

namespace {

// Dense evaluation plan for frame -> (tau tau^dagger/4) h(-tau^dagger <u,tau>/2).
// Terms of h are grouped by (block degree d, exponents outside the block); each
// group contributes C(w) <u,tau>^d with C(w) = sum c_alpha w^alpha.
class RadonPlan {
public:
  RadonPlan(const MVPolynomial& h, int block) : m_(h.dim()), nb_(1 << h.dim()), nvars_(h.nvars()) {
    const int off = block * m_;
    std::map<std::pair<int, MonoIndex>, std::size_t> index;
    for (const auto& [alpha, c] : h.terms()) {
      MonoIndex rest = alpha;
      std::vector<int> e(static_cast<std::size_t>(m_));
      int d = 0;
      for (int j = 0; j < m_; ++j) {
        e[static_cast<std::size_t>(j)] = alpha[off + j];
        d += alpha[off + j];
        rest.set(off + j, 0);
      }
      auto [it, fresh] = index.try_emplace({d, rest}, groups_.size());
      if (fresh) groups_.push_back(Group{d, rest, {}, {}, 0});
      std::vector<cplx> dense(static_cast<std::size_t>(nb_));
      for (const auto& [b, v] : c.terms()) dense[b.mask()] = v;
      groups_[it->second].terms.emplace_back(std::move(e), std::move(dense));
      max_degree_ = std::max(max_degree_, d);
    }
    std::size_t outputs = 0;
    for (auto& g : groups_) {
      g.first_output = outputs;
      for_each_exponent(g.degree, [&](const std::vector<int>& beta) {
        double mult = 1.0;
        int left = g.degree;
        for (int b : beta) {
          mult *= binomial(left, b);
          left -= b;
        }
        MonoIndex mono = g.rest;
        for (int j = 0; j < m_; ++j) mono.set(off + j, beta[static_cast<std::size_t>(j)]);
        g.betas.push_back(Beta{beta, mult});
        monos_.push_back(mono);
        ++outputs;
      });
    }
    signs_.resize(static_cast<std::size_t>(nb_ * nb_));
    for (int a = 0; a < nb_; ++a)
      for (int b = 0; b < nb_; ++b)
        signs_[static_cast<std::size_t>(a * nb_ + b)] = static_cast<double>(
            blade_product_sign(Blade(static_cast<std::uint32_t>(a)), Blade(static_cast<std::uint32_t>(b))));
  }

  std::size_t slots() const { return monos_.size() * static_cast<std::size_t>(nb_); }

  void fill(const NullFrame& frame, std::span<cplx> out) const {
    const auto nbs = static_cast<std::size_t>(nb_);
    const CVector tau = frame.tau_vector();
    const CVector w = -0.5 * frame.tau_dagger_vector();
    const auto stride = static_cast<std::size_t>(max_degree_ + 1);
    std::vector<cplx> wpow(static_cast<std::size_t>(m_) * stride), tpow(wpow.size());
    for (int j = 0; j < m_; ++j) {
      cplx a = 1.0, b = 1.0;
      for (int e = 0; e <= max_degree_; ++e) {
        wpow[static_cast<std::size_t>(j) * stride + static_cast<std::size_t>(e)] = a;
        tpow[static_cast<std::size_t>(j) * stride + static_cast<std::size_t>(e)] = b;
        a *= w[j];
        b *= tau[j];
      }
    }
    const auto q = frame.quarter_tau_tau_dagger().terms();
    std::vector<cplx> C(nbs), D(nbs);
    for (const auto& g : groups_) {
      std::fill(C.begin(), C.end(), cplx{});
      for (const auto& [e, coef] : g.terms) {
        cplx mono = 1.0;
        for (int j = 0; j < m_; ++j)
          mono *= wpow[static_cast<std::size_t>(j) * stride + static_cast<std::size_t>(e[static_cast<std::size_t>(j)])];
        for (std::size_t b = 0; b < nbs; ++b) C[b] += mono * coef[b];
      }
      std::fill(D.begin(), D.end(), cplx{});
      for (const auto& [qb, qc] : q)
        for (std::size_t b = 0; b < nbs; ++b)
          if (C[b] != cplx{}) {
            const std::size_t a = qb.mask();
            D[a ^ b] += signs_[a * nbs + b] * qc * C[b];
          }
      std::size_t o = g.first_output;
      for (const auto& beta : g.betas) {
        cplx sc = beta.multinomial;
        for (int j = 0; j < m_; ++j)
          sc *= tpow[static_cast<std::size_t>(j) * stride + static_cast<std::size_t>(beta.e[static_cast<std::size_t>(j)])];
        cplx* dst = out.data() + o * nbs;
        for (std::size_t b = 0; b < nbs; ++b) dst[b] += sc * D[b];
        ++o;
      }
    }
  }

  StiefelAverage collect(const DenseStiefelAverage& dense) const {
    StiefelAverage out{MVPolynomial(m_, nvars_), MVPolynomial(m_, nvars_), dense.samples};
    const auto nbs = static_cast<std::size_t>(nb_);
    for (std::size_t o = 0; o < monos_.size(); ++o) {
      std::vector<Multivector::Term> mean, se;
      for (std::size_t b = 0; b < nbs; ++b) {
        const Blade bl(static_cast<std::uint32_t>(b));
        mean.emplace_back(bl, dense.mean[o * nbs + b]);
        se.emplace_back(bl, dense.stderr_[o * nbs + b]);
      }
      out.mean.add_term(monos_[o], Multivector::from_terms(m_, std::move(mean)));
      out.stderr_.add_term(monos_[o], Multivector::from_terms(m_, std::move(se)));
    }
    return out;
  }

private:
  struct Beta {
    std::vector<int> e;
    double multinomial;
  };
  struct Group {
    int degree;
    MonoIndex rest;
    std::vector<std::pair<std::vector<int>, std::vector<cplx>>> terms;
    std::vector<Beta> betas;
    std::size_t first_output;
  };

  static double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  }

  template <typename F>
  void for_each_exponent(int d, F&& f) const {
    std::vector<int> e(static_cast<std::size_t>(m_), 0);
    auto rec = [&](auto& self, int pos, int left) -> void {
      if (pos == m_ - 1) {
        e[static_cast<std::size_t>(pos)] = left;
        f(e);
        return;
      }
      for (int v = left; v >= 0; --v) {
        e[static_cast<std::size_t>(pos)] = v;
        self(self, pos + 1, left - v);
      }
    };
    rec(rec, 0, d);
  }

  int m_, nb_, nvars_;
  int max_degree_ = 0;
  std::vector<Group> groups_;
  std::vector<MonoIndex> monos_;
  std::vector<double> signs_;
};

}  // namespace

StiefelAverage dual_of_radon(const MVPolynomial& f, const QuadratureSpec& spec, int block) {
  const int m = f.dim();
  require_transform_dim(m);
  if (block < 0 || block >= f.nblocks()) throw Error("dual_of_radon: block out of range");
  const RadonPlan plan(f, block);
  if (plan.slots() == 0) {
    return StiefelAverage{MVPolynomial(m, f.nvars()), MVPolynomial(m, f.nvars()), spec.samples};
  }
  const auto dense = stiefel_average_dense(
      m, plan.slots(), [&plan](const NullFrame& frame, std::span<cplx> out) { plan.fill(frame, out); },
      spec);
  return plan.collect(dense);
}

double dual_eigenvalue(int m, int k) {
  return 0.5 * std::exp(std::lgamma(m - 1.0) + std::lgamma(k + 1.0) - std::lgamma(m + k - 1.0));
}

std::string_view to_string(ThetaMode mode) {
  return mode == ThetaMode::printed ? "printed" : "derived";
}

ThetaMode theta_mode_from_string(std::string_view s) {
  if (s == "printed") return ThetaMode::printed;
  if (s == "derived") return ThetaMode::derived;
  throw Error("unknown theta mode '" + std::string(s) + "' (expected printed or derived)");
}

int theta_factor_count(int m, ThetaMode mode) {
  return mode == ThetaMode::printed ? m - 1 : m - 2;
}

double theta_multiplier(int m, int k, ThetaMode mode) {
  double r = 2.0 / factorial(m - 2);
  for (int j = 1; j <= theta_factor_count(m, mode); ++j) r *= j + k;
  return r;
}

MVPolynomial theta_invert(const MVPolynomial& g, ThetaMode mode, int block) {
  const int m = g.dim();
  require_transform_dim(m);
  MVPolynomial out = g;
  for (int j = 1; j <= theta_factor_count(m, mode); ++j)
    out = out * static_cast<double>(j) - gamma_op(out, block);
  return out * (2.0 / factorial(m - 2));
}

MonogenicPart monogenic_part_integral(const MVPolynomial& h, const QuadratureSpec& spec,
                                      ThetaMode mode, int block) {
  const int m = h.dim();
  const auto avg = dual_of_radon(h, spec, block);
  MonogenicPart out{theta_invert(avg.mean, mode, block), MVPolynomial(m, h.nvars()), mode,
                    avg.samples};
  for (const auto& [alpha, se] : avg.stderr_.terms()) {
    const double mult = std::abs(theta_multiplier(m, alpha.degree(block * m, m), mode));
    out.stderr_.add_term(alpha, se * mult);
  }
  return out;
}

namespace {

Multivector inner(const MVPolynomial& f, const MVPolynomial& g, Measure mu) {
  if (f.dim() != g.dim() || f.nvars() != g.nvars() || f.nvars() != f.dim())
    throw Error("inner product: expected single-block polynomials of equal dimension");
  const int m = f.dim();
  Multivector out(m);
  std::vector<int> sum(static_cast<std::size_t>(m));
  for (const auto& [alpha, a] : f.terms()) {
    Multivector j_alpha(m);
    for (const auto& [beta, b] : g.terms()) {
      for (int j = 0; j < m; ++j) sum[static_cast<std::size_t>(j)] = alpha[j] + beta[j];
      const double w = moment(mu, sum);
      if (w != 0.0) j_alpha += b * w;
    }
    out += a.dagger() * j_alpha;
  }
  return out;
}

}  // namespace

Multivector mb_inner(const MVPolynomial& f, const MVPolynomial& g) {
  return inner(f, g, Measure::gaussian);
}

Multivector ml2_inner(const MVPolynomial& f, const MVPolynomial& g) {
  return inner(f, g, Measure::sphere);
}

}  // namespace cliffrad
