#include "cliffrad/quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <thread>

namespace cliffrad {

namespace {

constexpr std::uint64_t kChunk = 4096;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based stream: a UniformRandomBitGenerator whose state is derived from
// (seed, index) only.
class FrameEngine {
public:
  using result_type = std::uint64_t;
  FrameEngine(std::uint64_t seed, std::uint64_t index)
      : state_(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL))) {}
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return splitmix64(state_);
  }

private:
  std::uint64_t state_;
};

// Runs body(c) for c in [0, chunks) on a small pool; the first exception is rethrown.
template <typename Body>
void for_each_chunk(std::uint64_t chunks, unsigned threads, Body&& body) {
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    try {
      for (std::uint64_t c = next++; c < chunks && !failed; c = next++) body(c);
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  };
  const unsigned hw = threads > 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
  const auto nthreads = static_cast<unsigned>(std::min<std::uint64_t>(hw, chunks));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

struct Entry {
  MonoIndex mono;
  Blade blade;
  double sum_re = 0, sum_im = 0, sq_re = 0, sq_im = 0;

  bool key_less(const Entry& o) const {
    return mono < o.mono || (mono == o.mono && blade < o.blade);
  }
  bool key_equal(const Entry& o) const { return mono == o.mono && blade == o.blade; }
};

using Accumulator = std::vector<Entry>;

// Sums `extra` into `acc`; both sorted by key.
void merge_into(Accumulator& acc, const Accumulator& extra) {
  Accumulator out;
  out.reserve(acc.size() + extra.size());
  auto a = acc.begin();
  auto b = extra.begin();
  while (a != acc.end() || b != extra.end()) {
    if (b == extra.end() || (a != acc.end() && a->key_less(*b))) {
      out.push_back(*a++);
    } else if (a == acc.end() || b->key_less(*a)) {
      out.push_back(*b++);
    } else {
      Entry e = *a;
      e.sum_re += b->sum_re;
      e.sum_im += b->sum_im;
      e.sq_re += b->sq_re;
      e.sq_im += b->sq_im;
      out.push_back(e);
      ++a;
      ++b;
    }
  }
  acc = std::move(out);
}

void accumulate(Accumulator& acc, const MVPolynomial& sample) {
  Accumulator missing;
  auto pos = acc.begin();
  for (const auto& [mono, mv] : sample.terms()) {
    for (const auto& [blade, c] : mv.terms()) {
      Entry key{mono, blade};
      pos = std::lower_bound(pos, acc.end(), key,
                             [](const Entry& x, const Entry& y) { return x.key_less(y); });
      Entry* slot = nullptr;
      if (pos != acc.end() && pos->key_equal(key)) {
        slot = &*pos;
      } else {
        missing.push_back(key);
        slot = &missing.back();
      }
      slot->sum_re += c.real();
      slot->sum_im += c.imag();
      slot->sq_re += c.real() * c.real();
      slot->sq_im += c.imag() * c.imag();
    }
  }
  if (!missing.empty()) merge_into(acc, missing);
}

}  // namespace

double double_factorial(int n) {
  double r = 1.0;
  for (int i = n; i > 1; i -= 2) r *= i;
  return r;
}

double gaussian_moment(const MonoIndex& alpha, int offset, int count) {
  double r = 1.0;
  for (int j = offset; j < offset + count; ++j) {
    const int a = alpha[j];
    if (a % 2 != 0) return 0.0;
    r *= double_factorial(a - 1);
  }
  return r;
}

double sphere_moment(const MonoIndex& alpha, int offset, int count) {
  double log_num = 0.0, total = 0.0;
  for (int j = offset; j < offset + count; ++j) {
    const int a = alpha[j];
    if (a % 2 != 0) return 0.0;
    const double b = (a + 1) / 2.0;
    log_num += std::lgamma(b);
    total += b;
  }
  return 2.0 * std::exp(log_num - std::lgamma(total));
}

double sphere_area(int m) {
  return 2.0 * std::pow(std::numbers::pi, m / 2.0) / std::tgamma(m / 2.0);
}

double moment(Measure mu, const MonoIndex& alpha, int offset, int count) {
  return mu == Measure::gaussian ? gaussian_moment(alpha, offset, count)
                                 : sphere_moment(alpha, offset, count);
}

double moment(Measure mu, std::span<const int> alpha) {
  double log_num = 0.0, total = 0.0, gauss = 1.0;
  for (int a : alpha) {
    if (a % 2 != 0) return 0.0;
    gauss *= double_factorial(a - 1);
    log_num += std::lgamma((a + 1) / 2.0);
    total += (a + 1) / 2.0;
  }
  return mu == Measure::gaussian ? gauss : 2.0 * std::exp(log_num - std::lgamma(total));
}

namespace {

Multivector integrate_all(const MVPolynomial& p, Measure mu) {
  if (p.nvars() != p.dim()) throw Error("integrate: expected a single-block polynomial");
  Multivector out(p.dim());
  for (const auto& [alpha, c] : p.terms()) {
    const double w = moment(mu, alpha, 0, p.dim());
    if (w != 0.0) out += c * w;
  }
  return out;
}

MVPolynomial drop_if_last(MVPolynomial p, int block) {
  if (p.nblocks() > 1 && block == p.nblocks() - 1) return truncate_vars(p, block * p.dim());
  return p;
}

}  // namespace

Multivector gaussian_integrate(const MVPolynomial& p) { return integrate_all(p, Measure::gaussian); }
Multivector sphere_integrate(const MVPolynomial& p) { return integrate_all(p, Measure::sphere); }

MVPolynomial integrate_block(const MVPolynomial& p, int block, Measure mu) {
  const int m = p.dim();
  if (block < 0 || block >= p.nblocks()) throw Error("integrate_block: block out of range");
  MVPolynomial out(m, p.nvars());
  for (const auto& [alpha, c] : p.terms()) {
    const double w = moment(mu, alpha, block * m, m);
    if (w == 0.0) continue;
    MonoIndex rest = alpha;
    for (int j = 0; j < m; ++j) rest.set(block * m + j, 0);
    out.add_term(rest, c * w);
  }
  return drop_if_last(std::move(out), block);
}

MVPolynomial pair_block(const MVPolynomial& kernel, int block, const MVPolynomial& f, Measure mu) {
  const int m = kernel.dim();
  if (f.dim() != m || f.nvars() != m) throw Error("pair_block: f must be a single-block polynomial in C_m");
  if (block < 0 || block >= kernel.nblocks()) throw Error("pair_block: block out of range");
  const int off = block * m;

  std::vector<std::pair<MonoIndex, const Multivector*>> shifted;
  for (const auto& [delta, a] : f.terms()) {
    MonoIndex s;
    for (int j = 0; j < m; ++j) s.set(off + j, delta[j]);
    shifted.emplace_back(s, &a);
  }

  // J_gamma = int x^gamma f(x) dmu, one per distinct kernel monomial in the block.
  std::map<MonoIndex, Multivector> moments;
  MVPolynomial out(m, kernel.nvars());
  for (const auto& [alpha, b] : kernel.terms()) {
    MonoIndex gamma, rest = alpha;
    for (int j = 0; j < m; ++j) {
      gamma.set(off + j, alpha[off + j]);
      rest.set(off + j, 0);
    }
    auto it = moments.find(gamma);
    if (it == moments.end()) {
      Multivector j_gamma(m);
      std::vector<int> sum(static_cast<std::size_t>(m));
      for (const auto& [s, a] : shifted) {
        for (int j = 0; j < m; ++j) sum[static_cast<std::size_t>(j)] = gamma[off + j] + s[off + j];
        const double w = moment(mu, sum);
        if (w != 0.0) j_gamma += *a * w;
      }
      it = moments.emplace(gamma, std::move(j_gamma)).first;
    }
    if (!it->second.is_zero()) out.add_term(rest, b * it->second);
  }
  return drop_if_last(std::move(out), block);
}

NullFrame stiefel_frame(int m, std::uint64_t seed, std::uint64_t index) {
  if (m < 2) throw Error("stiefel_frame: need m >= 2");
  FrameEngine eng(seed, index);
  std::normal_distribution<double> normal;
  const auto ms = static_cast<std::size_t>(m);
  for (;;) {
    std::vector<double> t(ms), s(ms);
    for (auto& v : t) v = normal(eng);
    for (auto& v : s) v = normal(eng);
    double tt = 0.0;
    for (double v : t) tt += v * v;
    const double tn = std::sqrt(tt);
    if (tn < 1e-8) continue;
    for (auto& v : t) v /= tn;
    double ss0 = 0.0, ts = 0.0;
    for (std::size_t j = 0; j < ms; ++j) {
      ss0 += s[j] * s[j];
      ts += t[j] * s[j];
    }
    for (std::size_t j = 0; j < ms; ++j) s[j] -= ts * t[j];
    double ss = 0.0;
    for (double v : s) ss += v * v;
    // Near-collinear draw: resample.
    if (ss < 1e-12 * ss0 || ss == 0.0) continue;
    const double sn = std::sqrt(ss);
    for (auto& v : s) v /= sn;
    return make_null_frame(std::move(t), std::move(s));
  }
}

std::vector<NullFrame> stiefel_sample(int m, const QuadratureSpec& spec) {
  if (spec.samples < 1) throw Error("quadrature: sample count must be >= 1");
  std::vector<NullFrame> out;
  out.reserve(spec.samples);
  for (std::uint64_t i = 0; i < spec.samples; ++i) out.push_back(stiefel_frame(m, spec.seed, i));
  return out;
}

StiefelAverage stiefel_average(int m, const FrameFamily& family, const QuadratureSpec& spec) {
  if (spec.samples < 1) throw Error("quadrature: sample count must be >= 1");
  const std::uint64_t n = spec.samples;
  const std::uint64_t chunks = (n + kChunk - 1) / kChunk;
  std::vector<Accumulator> partial(chunks);

  // Shape of the output comes from the first sample.
  const MVPolynomial first = family(stiefel_frame(m, spec.seed, 0));
  const int pm = first.dim();
  const int pn = first.nvars();

  for_each_chunk(chunks, spec.threads, [&](std::uint64_t c) {
    Accumulator acc;
    const std::uint64_t end = std::min(n, (c + 1) * kChunk);
    for (std::uint64_t i = c * kChunk; i < end; ++i) {
      const MVPolynomial v = i == 0 ? first : family(stiefel_frame(m, spec.seed, i));
      if (v.dim() != pm || v.nvars() != pn) throw Error("stiefel_average: family changed shape");
      accumulate(acc, v);
    }
    partial[c] = std::move(acc);
  });

  Accumulator total;
  for (const auto& acc : partial) merge_into(total, acc);

  StiefelAverage out{MVPolynomial(pm, pn), MVPolynomial(pm, pn), n};
  const double nd = static_cast<double>(n);
  for (const auto& e : total) {
    const double mean_re = e.sum_re / nd;
    const double mean_im = e.sum_im / nd;
    out.mean.add_term(e.mono, Multivector::blade(pm, e.blade, cplx(mean_re, mean_im)));
    if (n > 1 && spec.report_stderr) {
      const double var_re = std::max(0.0, (e.sq_re - nd * mean_re * mean_re) / (nd - 1.0));
      const double var_im = std::max(0.0, (e.sq_im - nd * mean_im * mean_im) / (nd - 1.0));
      out.stderr_.add_term(e.mono, Multivector::blade(pm, e.blade,
                                                      cplx(std::sqrt(var_re / nd), std::sqrt(var_im / nd))));
    }
  }
  return out;
}

DenseStiefelAverage stiefel_average_dense(int m, std::size_t slots, const DenseFill& fill,
                                          const QuadratureSpec& spec) {
  if (spec.samples < 1) throw Error("quadrature: sample count must be >= 1");
  const std::uint64_t n = spec.samples;
  const std::uint64_t chunks = (n + kChunk - 1) / kChunk;
  // Per chunk: sum_re, sum_im, sq_re, sq_im for every slot.
  std::vector<std::vector<double>> partial(chunks);
  for_each_chunk(chunks, spec.threads, [&](std::uint64_t c) {
    std::vector<double> acc(4 * slots, 0.0);
    std::vector<cplx> value(slots);
    const std::uint64_t end = std::min(n, (c + 1) * kChunk);
    for (std::uint64_t i = c * kChunk; i < end; ++i) {
      std::fill(value.begin(), value.end(), cplx{});
      fill(stiefel_frame(m, spec.seed, i), value);
      for (std::size_t k = 0; k < slots; ++k) {
        const double re = value[k].real(), im = value[k].imag();
        acc[4 * k] += re;
        acc[4 * k + 1] += im;
        acc[4 * k + 2] += re * re;
        acc[4 * k + 3] += im * im;
      }
    }
    partial[c] = std::move(acc);
  });

  std::vector<double> total(4 * slots, 0.0);
  for (const auto& acc : partial)
    for (std::size_t k = 0; k < total.size(); ++k) total[k] += acc[k];

  DenseStiefelAverage out{std::vector<cplx>(slots), std::vector<cplx>(slots), n};
  const double nd = static_cast<double>(n);
  for (std::size_t k = 0; k < slots; ++k) {
    const double mean_re = total[4 * k] / nd, mean_im = total[4 * k + 1] / nd;
    out.mean[k] = cplx(mean_re, mean_im);
    if (n > 1 && spec.report_stderr) {
      const double var_re = std::max(0.0, (total[4 * k + 2] - nd * mean_re * mean_re) / (nd - 1.0));
      const double var_im = std::max(0.0, (total[4 * k + 3] - nd * mean_im * mean_im) / (nd - 1.0));
      out.stderr_[k] = cplx(std::sqrt(var_re / nd), std::sqrt(var_im / nd));
    }
  }
  return out;
}

bool within_stderr(const MVPolynomial& estimate, const MVPolynomial& stderr_,
                   const MVPolynomial& expected, double sigmas, double abs_floor, double* worst) {
  const MVPolynomial diff = estimate - expected;
  bool ok = true;
  double w = 0.0;
  for (const auto& [mono, mv] : diff.terms()) {
    const Multivector se = stderr_.coeff(mono);
    for (const auto& [blade, c] : mv.terms()) {
      const cplx s = se.coeff(blade);
      const double parts[2][2] = {{std::abs(c.real()), s.real()}, {std::abs(c.imag()), s.imag()}};
      for (const auto& [d, sd] : parts) {
        if (d > sigmas * sd + abs_floor) ok = false;
        const double excess = d - abs_floor;
        if (excess <= 0.0) continue;
        w = std::max(w, sd > 0.0 ? excess / sd : std::numeric_limits<double>::infinity());
      }
    }
  }
  if (worst) *worst = w;
  return ok;
}

}  // namespace cliffrad
