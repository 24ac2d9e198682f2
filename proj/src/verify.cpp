#include "cliffrad/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "cliffrad/random.hpp"
#include "cliffrad/special.hpp"
#include "cliffrad/transforms.hpp"

namespace cliffrad {

namespace {

constexpr double kSigmas = 5.0;

double factorial(int n) { return std::tgamma(n + 1.0); }

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

MVPolynomial truncated_exp(int m, int K) {
  MVPolynomial out(m, 2 * m);
  for (int k = 0; k <= K; ++k) out += pairing_power(m, k) * (1.0 / factorial(k));
  return out;
}

MVPolynomial sum_of_squares_power(int m, int l, int count) {
  MVPolynomial q(m);
  for (int j = 0; j < count; ++j) {
    MonoIndex a;
    a.set(j, 2);
    q.add_term(a, Multivector::scalar(m, 1.0));
  }
  MVPolynomial p = MVPolynomial::constant(m, m, Multivector::scalar(m, 1.0));
  for (int i = 0; i < l; ++i) p = p * q;
  return p;
}

// Degree ranges of the Monte-Carlo checks; the per-sample layout grows like
// C(k+m-1, m-1)^2 2^m for two-block integrands.
int mc_two_block_degree(int m, int kmax) { return std::min(kmax, m <= 4 ? 3 : (m == 5 ? 2 : 1)); }

std::string range(const char* var, int hi) { return std::string(var) + "<=" + std::to_string(hi); }

class Suite {
public:
  explicit Suite(const VerifyConfig& c) : cfg_(c), m_(c.m), kmax_(c.kmax) {}

  VerifyReport run() {
    VerifyReport report;
    report.config = cfg_;
    exact_checks(report);
    monte_carlo_checks(report);
    discrepancy_checks(report);
    std::sort(report.checks.begin(), report.checks.end(),
              [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
    return report;
  }

private:
  Rng rng_for(int id) const { return Rng(cfg_.spec.seed * 1000003ULL + static_cast<std::uint64_t>(id)); }

  static CheckRecord error_check(std::string id, std::string anchor, double measured, double tol,
                                 std::string provenance, std::string scope) {
    CheckRecord r;
    r.id = std::move(id);
    r.anchor = std::move(anchor);
    r.measured = measured;
    r.expected = 0.0;
    r.tolerance = tol;
    r.provenance = std::move(provenance);
    r.scope = std::move(scope);
    r.status = std::isfinite(measured) && measured <= tol ? CheckStatus::pass : CheckStatus::fail;
    return r;
  }

  void exact_checks(VerifyReport& rep) {
    // 01: null-frame identities.
    {
      Rng rng = rng_for(1);
      double worst = 0.0;
      for (int i = 0; i < 100; ++i) {
        const NullFrame f = random_frame(m_, rng);
        const auto& t = f.tau();
        const auto& td = f.tau_dagger();
        worst = std::max({worst, (t * t).max_abs(), max_abs_diff(t * td * t, t * 4.0),
                          max_abs_diff(td * t + t * td, Multivector::scalar(m_, 4.0))});
      }
      rep.checks.push_back(error_check("V01", "null-frame identities tau^2=0, tau tau+ tau=4 tau, "
                                              "tau+ tau + tau tau+=4",
                                       worst, 1e-12, "published", "100 frames"));
    }
    // 02: Gaussian moments of (x1^2+x2^2)^l.
    {
      double worst = 0.0;
      for (int l = 0; l <= 6; ++l) {
        const double expected = std::ldexp(1.0, l) * factorial(l);
        const double got = gaussian_integrate(sum_of_squares_power(m_, l, 2)).scalar_part().real();
        worst = std::max(worst, std::abs(got - expected) / expected);
      }
      rep.checks.push_back(error_check("V02", "normalized Gaussian integral of (x1^2+x2^2)^l = 2^l l!", worst,
                                       1e-12, "published", "l<=6"));
    }
    // 03: sphere moments of (w1^2+w2^2)^k.
    {
      double worst = 0.0;
      for (int k = 0; k <= kmax_; ++k) {
        const double expected = 2 * std::pow(std::numbers::pi, m_ / 2.0) * factorial(k) / std::tgamma(m_ / 2.0 + k);
        const double got = sphere_integrate(sum_of_squares_power(m_, k, 2)).scalar_part().real();
        worst = std::max(worst, std::abs(got - expected) / expected);
      }
      rep.checks.push_back(error_check("V03", "sphere integral of (w1^2+w2^2)^k = 2 pi^(m/2) k!/Gamma(m/2+k)",
                                       worst, 1e-12, "oracle", range("k", kmax_)));
    }
    // 04: orientation of the zonal monogenics.
    {
      double worst = 0.0;
      for (int k = 0; k <= kmax_; ++k) {
        const MVPolynomial z = zonal_poly(m_, k);
        worst = std::max({worst, dirac(z, 0).max_abs(), dirac_right(z, 1).max_abs()});
      }
      rep.checks.push_back(error_check("V04", "zonal monogenic Z_k(x,u): left monogenic in x, right in u",
                                       worst, 1e-10, "oracle", range("k", kmax_)));
    }
    // 05: Fischer decomposition of <x,u>^k / k!.
    {
      double worst = 0.0;
      for (int k = 0; k <= kmax_; ++k) {
        const MVPolynomial lhs = pairing_power(m_, k) * (1.0 / factorial(k));
        MVPolynomial rhs(m_, 2 * m_);
        for (int s = 0; s <= k; ++s) {
          MVPolynomial t = zonal_ks_poly(m_, k, s);
          for (int i = 0; i < s; ++i) t = mul_vector_right(mul_vector_left(t, 0), 1);
          rhs += t;
        }
        worst = std::max(worst, max_abs_diff(lhs, rhs));
      }
      rep.checks.push_back(error_check("V05", "<x,u>^k/k! = sum_s x^s Z_{k,s}(x,u) u^s", worst, 1e-10,
                                       "published", range("k", kmax_)));
    }
    // 06: algebraic monogenic projection.
    {
      Rng rng = rng_for(6);
      double worst = 0.0;
      const int deg = std::min(kmax_, m_ <= 4 ? 6 : 4);
      for (int trial = 0; trial < 3; ++trial) {
        const MVPolynomial r = random_polynomial(m_, deg, rng);
        const auto comps = fischer_decompose(r);
        MVPolynomial rebuilt(m_);
        for (std::size_t l = 0; l < comps.size(); ++l) {
          worst = std::max(worst, dirac(comps[l]).max_abs());
          MVPolynomial t = comps[l];
          for (std::size_t s = 0; s < l; ++s) t = mul_vector_left(t);
          rebuilt += t;
        }
        worst = std::max(worst, max_abs_diff(rebuilt, r));
        const MVPolynomial M = comps.front();
        worst = std::max(worst, (euler(M) + gamma_op(M)).max_abs());
        const auto div = divide_by_norm_squared(mul_vector_left(r - M) * -1.0);
        worst = std::max(worst, div.remainder.max_abs());
      }
      rep.checks.push_back(error_check("V06", "Fischer decomposition r = sum x^l h_l with monogenic h_l",
                                       worst, 1e-10, "published", range("deg", deg)));
    }
    // 07: zonal reproducing property.
    {
      Rng rng = rng_for(7);
      double worst = 0.0;
      const int kk = std::min(kmax_, 4);
      for (int k = 0; k <= kk; ++k) {
        const MVPolynomial P = random_spherical_monogenic(m_, k, rng);
        worst = std::max(worst, max_abs_diff(pair_block(zonal_poly(m_, k), 1, P, Measure::gaussian), P));
      }
      rep.checks.push_back(error_check("V07", "Gaussian pairing with Z_k reproduces spherical monogenics",
                                       worst, 1e-9, "published", range("k", kk)));
    }
    // 08: Fourier-Borel kernel.
    {
      double worst = 0.0;
      const int K = mc_two_block_degree(m_, kmax_);
      const MVPolynomial E = fourier_borel_poly(m_, K);
      worst = std::max(worst, max_abs_diff(swap_blocks(dagger(E), 0, 1), E));
      worst = std::max(worst, max_abs_diff(monogenic_projection(truncated_exp(m_, K), 0), E));
      rep.checks.push_back(error_check("V08", "Fourier-Borel kernel: Hermitian, monogenic part of exp<x,u>",
                                       worst, 1e-10, "published", range("K", K)));
    }
    // 09: Bargmann-Radon kernel coefficients reproduce plane waves.
    {
      Rng rng = rng_for(9);
      const NullFrame fr = random_frame(m_, rng);
      const int ll = std::min(kmax_, 4);
      double worst = std::max({std::abs(bargmann_lambda(0) - 0.25), std::abs(bargmann_lambda(1) + 0.125),
                               std::abs(bargmann_lambda(2) - 1.0 / 32.0)});
      for (int l = 0; l <= ll; ++l) {
        const MVPolynomial f = planewave(fr, l).realized;
        worst = std::max(worst, max_abs_diff(bargmann_radon_integral(f, fr), f));
      }
      rep.checks.push_back(error_check("V09", "lambda_l = (-1)^l/(l! 4 2^l) reproduces plane waves",
                                       worst, 1e-9, "published", range("l", ll)));
    }
    // 10: Bargmann-Radon forms, idempotence, self-adjointness, monogenicity.
    {
      Rng rng = rng_for(10);
      const int deg = std::min(kmax_, 4);
      double worst = 0.0;
      for (int trial = 0; trial < 10; ++trial) {
        const NullFrame fr = random_frame(m_, rng);
        const MVPolynomial f = random_monogenic(m_, deg, rng);
        const MVPolynomial g = random_monogenic(m_, deg, rng);
        const MVPolynomial a = bargmann_radon_integral(f, fr);
        worst = std::max({worst, max_abs_diff(a, bargmann_radon_char(f, fr)),
                          max_abs_diff(bargmann_radon_integral(a, fr), a), dirac(a).max_abs(),
                          max_abs_diff(mb_inner(a, g), mb_inner(f, bargmann_radon_integral(g, fr)))});
      }
      rep.checks.push_back(error_check("V10", "Bargmann-Radon integral form equals (tau tau+/4) f(-tau+<u,tau>/2); "
                                              "idempotent and self-adjoint",
                                       worst, 1e-9, "published", "10 functions, " + range("deg", deg)));
    }
    // 11: Szego-Radon kernel reproduces plane waves.
    {
      Rng rng = rng_for(11);
      const NullFrame fr = random_frame(m_, rng);
      const int ll = std::min(kmax_, 3);
      double worst = 0.0;
      for (int l = 0; l <= ll; ++l) {
        const MVPolynomial f = planewave(fr, l).realized;
        worst = std::max(worst, max_abs_diff(szego_radon_integral(f, fr), f));
      }
      rep.checks.push_back(error_check("V11", "Szego-Radon kernel reproduces plane waves on the sphere", worst,
                                       1e-9, "oracle", range("l", ll)));
    }
    // 12: kernel lemma at interior points.
    {
      Rng rng = rng_for(12);
      std::uniform_real_distribution<double> radius(0.0, 0.35);
      const NullFrame fr = random_frame(m_, rng);
      double worst = 0.0;
      for (int pt = 0; pt < 50; ++pt) {
        CVector x = random_real_vector(m_, rng), w = random_real_vector(m_, rng);
        x = (radius(rng) / std::sqrt(pairing(x, x).real())) * x;
        w = (1.0 / std::sqrt(pairing(w, w).real())) * w;
        const cplx lambda = pairing(x, fr.tau_vector());
        const Multivector closed =
            fr.quarter_tau_tau_dagger() * szego_kernel((-0.5 * lambda) * fr.tau_dagger_vector(), w);
        const cplx z = lambda * pairing(w, fr.tau_dagger_vector());
        cplx series = 0.0, zk = 1.0;
        for (int k = 0; k <= 120; ++k) {
          series += szego_series_coefficient(m_, k, SeriesForm::closed) * zk;
          zk *= z;
        }
        worst = std::max(worst, max_abs_diff(closed, fr.quarter_tau_tau_dagger() * series));
      }
      rep.checks.push_back(error_check("V12", "K_tau(x,w) = (tau tau+/4) S(-<x,tau> tau+/2, w)", worst, 1e-9,
                                       "published", "50 interior points"));
    }
    // 13: Szego-Radon characterization.
    {
      Rng rng = rng_for(13);
      const int deg = std::min(kmax_, 3);
      double worst = 0.0;
      for (int trial = 0; trial < 5; ++trial) {
        const NullFrame fr = random_frame(m_, rng);
        const MVPolynomial f = random_monogenic(m_, deg, rng);
        worst = std::max(worst, max_abs_diff(szego_radon_integral(f, fr), szego_radon_char(f, fr)));
      }
      rep.checks.push_back(error_check("V13", "Szego-Radon integral form equals (tau tau+/4) f(-tau+<u,tau>/2)",
                                       worst, 1e-9, "published", "5 functions, " + range("deg", deg)));
    }
    // 14: transform of sigma <x,sigma>^l.
    {
      Rng rng = rng_for(14);
      const int ll = std::min(kmax_, 4);
      double worst = 0.0;
      for (int trial = 0; trial < 3; ++trial) {
        const NullFrame fr = random_frame(m_, rng);
        const CVector sigma = random_frame(m_, rng).tau_vector();
        const Multivector sig = sigma.to_multivector();
        const cplx c = -0.5 * pairing(fr.tau_dagger_vector(), sigma);
        for (int l = 0; l <= ll; ++l) {
          const MVPolynomial g = MVPolynomial::linear_form_power(m_, m_, sigma, l) * sig;
          const MVPolynomial expected = (fr.quarter_tau_tau_dagger() * sig) *
                                        MVPolynomial::linear_form_power(m_, m_, fr.tau_vector(), l) * std::pow(c, l);
          worst = std::max({worst, max_abs_diff(szego_radon_char(g, fr), expected),
                            max_abs_diff(szego_radon_integral(g, fr), expected)});
        }
      }
      rep.checks.push_back(error_check("V14", "R_tau[sigma <x,sigma>^l] = (tau tau+/4) sigma (-<tau+,sigma><u,tau>/2)^l",
                                       worst, 1e-9, "published", range("l", ll)));
    }
  }

  CheckRecord sigma_check(std::string id, std::string anchor, double worst, std::string provenance,
                          std::string scope) const {
    CheckRecord r = error_check(std::move(id), std::move(anchor), worst, kSigmas, std::move(provenance),
                                std::move(scope));
    r.measured = json{{"max-sigma", worst}, {"samples", cfg_.spec.samples}};
    return r;
  }

  void monte_carlo_checks(VerifyReport& rep) {
    const QuadratureSpec& spec = cfg_.spec;
    // 15: mean of tau tau+/4.
    {
      const auto avg = dual_of_radon(MVPolynomial::constant(m_, m_, Multivector::scalar(m_, 1.0)), spec);
      const MVPolynomial half = MVPolynomial::constant(m_, m_, Multivector::scalar(m_, 0.5));
      const double bound = 4.0 / std::sqrt(static_cast<double>(spec.samples));
      CheckRecord r = error_check("V15", "Stiefel mean of tau tau+/4 is 1/2", max_abs_diff(avg.mean, half), bound,
                                  "oracle", "samples=" + std::to_string(spec.samples));
      half_mean_ = avg.mean.coeff(MonoIndex{}).scalar_part().real();
      rep.checks.push_back(std::move(r));
    }
    // 16, 18, 19: dual-transform eigenvalues and the two inversions.
    {
      Rng rng = rng_for(16);
      const int kk = std::min(kmax_, 3);
      double eig = 0.0, inv_derived = 0.0, inv_printed = 0.0;
      for (int k = 0; k <= kk; ++k) {
        const MVPolynomial P = random_spherical_monogenic(m_, k, rng);
        const auto d = dual_of_radon(P, spec);
        double w = 0.0;
        within_stderr(d.mean, d.stderr_, P * dual_eigenvalue(m_, k), kSigmas, 1e-12, &w);
        eig = std::max(eig, w);
        for (const ThetaMode mode : {ThetaMode::derived, ThetaMode::printed}) {
          const double mult = theta_multiplier(m_, k, mode);
          const MVPolynomial inv = theta_invert(d.mean, mode);
          const double target = mode == ThetaMode::derived ? 1.0 : m_ + k - 1.0;
          within_stderr(inv, d.stderr_ * std::abs(mult), P * target, kSigmas, 1e-10, &w);
          (mode == ThetaMode::derived ? inv_derived : inv_printed) =
              std::max(mode == ThetaMode::derived ? inv_derived : inv_printed, w);
        }
      }
      rep.checks.push_back(sigma_check("V16", "dual o R_tau on P_k = (1/2) Gamma(m-1) k!/Gamma(m+k-1) P_k", eig,
                                       "published", range("k", kk)));
      rep.checks.push_back(sigma_check("V18", "Theta with m-2 factors inverts dual o R_tau", inv_derived, "oracle",
                                       range("k", kk)));
      rep.checks.push_back(sigma_check("V19", "Theta with m-1 factors gives (m+k-1) P_k", inv_printed, "oracle",
                                       range("k", kk)));
    }
    // 17: Stiefel average of tau tau+ <u,tau>^k <x,tau+>^k = mu_k Z_k(u,x).
    {
      const int kk = mc_two_block_degree(m_, kmax_);
      double worst = 0.0;
      for (int k = 0; k <= kk; ++k) {
        const double scale = 4.0 * std::pow(-2.0, k);
        const auto avg = dual_of_radon(pairing_power(m_, k), spec);
        const double sign = k % 2 == 0 ? 1.0 : -1.0;
        const double mu = std::ldexp(1.0, k + 1) * sign *
                          std::exp(std::lgamma(m_ - 1.0) + 2 * std::lgamma(k + 1.0) - std::lgamma(m_ + k - 1.0));
        double w = 0.0;
        within_stderr(avg.mean * scale, avg.stderr_ * std::abs(scale), zonal_poly(m_, k) * mu, kSigmas, 1e-12, &w);
        worst = std::max(worst, w);
      }
      rep.checks.push_back(sigma_check("V17", "Stiefel average of tau tau+ <u,tau>^k <x,tau+>^k = mu_k Z_k(u,x)",
                                       worst, "published", range("k", kk)));
    }
    // 20: monogenic part by integration versus the algebraic projection.
    {
      Rng rng = rng_for(20);
      const int deg = std::min(kmax_, 3);
      double worst = 0.0;
      for (int trial = 0; trial < 5; ++trial) {
        const MVPolynomial h = random_polynomial(m_, deg, rng);
        const auto part = monogenic_part_integral(h, spec, ThetaMode::derived);
        double w = 0.0;
        within_stderr(part.value, part.stderr_, monogenic_projection(h), kSigmas, 1e-10, &w);
        worst = std::max(worst, w);
      }
      const int K = mc_two_block_degree(m_, kmax_);
      const auto e = monogenic_part_integral(truncated_exp(m_, K), spec, ThetaMode::derived);
      double w = 0.0;
      within_stderr(e.value, e.stderr_, fourier_borel_poly(m_, K), kSigmas, 1e-10, &w);
      worst = std::max(worst, w);
      rep.checks.push_back(sigma_check("V20", "M[h] = Theta dual (tau tau+/4) h(-tau+<u,tau>/2); exp gives E(u,x)",
                                       worst, "published",
                                       "5 functions " + range("deg", deg) + ", exp " + range("K", K)));
    }
  }

  static CheckRecord discrepancy(std::string id, std::string anchor, double gap, double oracle_ok,
                                 json oracle, json printed) {
    CheckRecord r;
    r.id = std::move(id);
    r.anchor = std::move(anchor);
    r.measured = gap;
    r.expected = 0.0;
    r.tolerance = 1e-9;
    r.provenance = "oracle";
    r.oracle_value = std::move(oracle);
    r.printed_value = std::move(printed);
    if (oracle_ok > 1e-9) r.status = CheckStatus::fail;
    else r.status = gap > 1e-9 ? CheckStatus::discrepancy : CheckStatus::pass;
    return r;
  }

  void discrepancy_checks(VerifyReport& rep) {
    // 21: plane-wave norm constant.
    {
      Rng rng = rng_for(21);
      const NullFrame fr = random_frame(m_, rng);
      const int k = std::min(kmax_, 2);
      const MVPolynomial f = planewave(fr, k).realized;
      const Multivector exact = ml2_inner(f, f);
      const Multivector oracle = planewave_norm(fr, k);
      const Multivector printed = planewave_norm_printed(fr, k);
      CheckRecord r = discrepancy("V21", "sphere norm of the plane wave <x,tau>^k tau", max_abs_diff(exact, printed),
                                  max_abs_diff(exact, oracle),
                                  {{"formula", "2 pi^(m/2) k!/Gamma(m/2+k) tau+ tau"}, {"value", to_json(exact)}},
                                  {{"formula", "2 pi^(m/2) Gamma(k+1)/Gamma(m/2+1) tau tau+"},
                                   {"value", to_json(printed)}});
      r.scope = "k=" + std::to_string(k);
      rep.checks.push_back(std::move(r));
    }
    // 22: series coefficients of K_tau.
    {
      Rng rng = rng_for(22);
      const NullFrame fr = random_frame(m_, rng);
      json oracle = json::array(), printed = json::array();
      for (int k = 0; k <= 3; ++k) {
        oracle.push_back(szego_series_coefficient(m_, k, SeriesForm::closed));
        printed.push_back(szego_series_coefficient(m_, k, SeriesForm::printed));
      }
      const MVPolynomial f = planewave(fr, 1).realized;
      const double closed_err = max_abs_diff(szego_radon_integral(f, fr, SeriesForm::closed), f);
      const double printed_err = max_abs_diff(szego_radon_integral(f, fr, SeriesForm::printed), f);
      CheckRecord r = discrepancy(
          "V22", "series coefficients of K_tau(x,y) in <x,tau>^k <y,tau+>^k", printed_err, closed_err,
          {{"formula", "(-1)^k Gamma(m/2+k)/(2 pi^(m/2) k!)"}, {"coefficients", oracle},
           {"plane-wave-error", closed_err}},
          {{"formula", "Gamma(m/2+k)/(2^(m/2) Gamma(k+1))"}, {"coefficients", printed},
           {"plane-wave-error", printed_err}});
      r.scope = "k<=3";
      rep.checks.push_back(std::move(r));
    }
    // 23: number of factors in Theta.
    {
      const double derived = theta_multiplier(m_, 0, ThetaMode::derived) * dual_eigenvalue(m_, 0);
      const double printed = theta_multiplier(m_, 0, ThetaMode::printed) * dual_eigenvalue(m_, 0);
      const double mc_gap = std::abs(half_mean_ - 0.5);
      const double bound = 4.0 / std::sqrt(static_cast<double>(cfg_.spec.samples));
      CheckRecord r = discrepancy(
          "V23", "factor count of Theta in the inversion formula", std::abs(printed - 1.0),
          std::abs(derived - 1.0) + (mc_gap > bound ? 1.0 : 0.0),
          {{"factors", theta_factor_count(m_, ThetaMode::derived)}, {"theta-dual-R-on-constants", derived},
           {"stiefel-mean-tau-tau+/4", half_mean_}},
          {{"factors", theta_factor_count(m_, ThetaMode::printed)}, {"theta-dual-R-on-constants", printed}});
      r.scope = "k=0";
      rep.checks.push_back(std::move(r));
    }
  }

  VerifyConfig cfg_;
  int m_, kmax_;
  double half_mean_ = 0.0;
};

}  // namespace

void validate(const VerifyConfig& config) {
  if (config.m < 3 || config.m > 6) throw UsageError("--m must satisfy 3 <= m <= 6");
  if (config.kmax < 0 || config.kmax > 6) throw UsageError("--kmax must satisfy 0 <= kmax <= 6");
  if (config.spec.samples < 2) throw UsageError("--samples must be at least 2");
}

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::discrepancy: return "discrepancy";
  }
  return "fail";
}

bool VerifyReport::failed() const { return count(CheckStatus::fail) > 0; }

int VerifyReport::count(CheckStatus s) const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [s](const auto& c) { return c.status == s; }));
}

json VerifyReport::record_json(const CheckRecord& r) const {
  json j = {{"id", r.id},
            {"anchor", r.anchor},
            {"status", to_string(r.status)},
            {"measured", r.measured},
            {"expected", r.expected},
            {"tolerance", r.tolerance},
            {"provenance", r.provenance}};
  if (!r.scope.empty()) j["scope"] = r.scope;
  if (!r.oracle_value.is_null()) j["oracle"] = r.oracle_value;
  if (!r.printed_value.is_null()) j["printed"] = r.printed_value;
  return j;
}

json VerifyReport::summary_json() const {
  return {{"summary", suite},
          {"m", config.m},
          {"kmax", config.kmax},
          {"samples", config.spec.samples},
          {"seed", config.spec.seed},
          {"checks", checks.size()},
          {"passed", count(CheckStatus::pass)},
          {"failed", count(CheckStatus::fail)},
          {"discrepancies", count(CheckStatus::discrepancy)},
          {"status", failed() ? "fail" : "pass"}};
}

std::string VerifyReport::to_jsonl() const {
  std::ostringstream out;
  for (const auto& c : checks) out << record_json(c).dump() << '\n';
  out << summary_json().dump() << '\n';
  return out.str();
}

VerifyReport run_verify(const VerifyConfig& config) {
  validate(config);
  VerifyConfig c = config;
  c.spec.report_stderr = true;
  return Suite(c).run();
}

}  // namespace cliffrad
