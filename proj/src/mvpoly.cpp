#include "cliffrad/mvpoly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cliffrad {

namespace {

MonoIndex unit_index(int j) {
  MonoIndex a;
  a.set(j, 1);
  return a;
}

// Enumerates all exponent vectors of total degree k over `count` variables
// starting at `offset`.
template <typename Fn>
void for_each_composition(int k, int offset, int count, Fn&& fn) {
  MonoIndex alpha;
  auto rec = [&](auto& self, int pos, int left) -> void {
    if (pos == count - 1) {
      alpha.set(offset + pos, left);
      fn(alpha);
      return;
    }
    for (int e = left; e >= 0; --e) {
      alpha.set(offset + pos, e);
      self(self, pos + 1, left - e);
    }
    alpha.set(offset + pos, 0);
  };
  if (count == 0) {
    if (k == 0) fn(alpha);
    return;
  }
  rec(rec, 0, k);
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

cplx ipow(cplx z, int e) {
  cplx r = 1.0;
  for (int i = 0; i < e; ++i) r *= z;
  return r;
}

// d/dx (x^s M_j) = dirac_power_multiplier(s, j, m) x^{s-1} M_j for monogenic M_j.
double dirac_power_multiplier(int s, int j, int m) {
  if (s % 2 == 0) return -static_cast<double>(s);
  return -static_cast<double>(s - 1 + 2 * j + m);
}

void check_block(const MVPolynomial& p, int block) {
  if (block < 0 || block >= p.nblocks())
    throw Error("variable block " + std::to_string(block) + " out of range");
}

std::vector<MVPolynomial> decompose_homogeneous(const MVPolynomial& r, int d, int block) {
  if (d == 0) return {r};
  const int m = r.dim();
  const auto sub = decompose_homogeneous(dirac(r, block), d - 1, block);
  std::vector<MVPolynomial> comps(static_cast<std::size_t>(d) + 1, MVPolynomial(m, r.nvars()));
  MVPolynomial rest = r;
  for (int s = 1; s <= d; ++s) {
    comps[static_cast<std::size_t>(s)] =
        sub[static_cast<std::size_t>(s - 1)] * (1.0 / dirac_power_multiplier(s, d - s, m));
    MVPolynomial shifted = comps[static_cast<std::size_t>(s)];
    for (int i = 0; i < s; ++i) shifted = mul_vector_left(shifted, block);
    rest -= shifted;
  }
  comps[0] = std::move(rest);
  return comps;
}

}  // namespace

MonoIndex::MonoIndex(std::span<const int> exponents) {
  if (exponents.size() > static_cast<std::size_t>(kMaxVars))
    throw Error("too many variables (max " + std::to_string(kMaxVars) + ")");
  for (std::size_t j = 0; j < exponents.size(); ++j) set(static_cast<int>(j), exponents[j]);
}

void MonoIndex::set(int j, int value) {
  if (j < 0 || j >= kMaxVars) throw Error("variable index out of range");
  if (value < 0 || value > kMaxDegree) throw Error("exponent out of range (degree cap is 12)");
  e_[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(value);
}

int MonoIndex::degree() const { return degree(0, kMaxVars); }

int MonoIndex::degree(int offset, int count) const {
  int d = 0;
  for (int j = offset; j < offset + count; ++j) d += e_[static_cast<std::size_t>(j)];
  return d;
}

std::vector<int> MonoIndex::exponents(int nvars) const {
  return std::vector<int>(e_.begin(), e_.begin() + nvars);
}

MonoIndex operator+(const MonoIndex& a, const MonoIndex& b) {
  MonoIndex out;
  for (int j = 0; j < kMaxVars; ++j) out.set(j, a[j] + b[j]);
  return out;
}

MVPolynomial::MVPolynomial(int m, int nvars) : m_(m), nvars_(nvars) {
  if (m < 1 || m > kMaxDim) throw Error("Clifford dimension out of range");
  if (nvars < 0 || nvars > kMaxVars || nvars % m != 0)
    throw Error("variable count must be a multiple of m and at most " + std::to_string(kMaxVars));
}

MVPolynomial MVPolynomial::constant(int m, int nvars, const Multivector& c) {
  MVPolynomial p(m, nvars);
  p.add_term(MonoIndex{}, c);
  return p;
}

MVPolynomial MVPolynomial::variable(int m, int nvars, int j) {
  MVPolynomial p(m, nvars);
  if (j < 0 || j >= nvars) throw Error("variable index out of range");
  p.add_term(unit_index(j), Multivector::scalar(m, 1.0));
  return p;
}

MVPolynomial MVPolynomial::vector_field(int m, int nvars, int block) {
  MVPolynomial p(m, nvars);
  check_block(p, block);
  for (int j = 0; j < m; ++j) p.add_term(unit_index(block * m + j), Multivector::unit(m, j + 1));
  return p;
}

MVPolynomial MVPolynomial::linear_form(int m, int nvars, const CVector& a, int block) {
  return linear_form_power(m, nvars, a, 1, block);
}

MVPolynomial MVPolynomial::linear_form_power(int m, int nvars, const CVector& a, int k, int block) {
  MVPolynomial p(m, nvars);
  check_block(p, block);
  if (a.dim() != m) throw Error("linear form: dimension mismatch");
  const double kfact = factorial(k);
  for_each_composition(k, block * m, m, [&](const MonoIndex& alpha) {
    cplx c = kfact;
    for (int j = 0; j < m; ++j) {
      const int e = alpha[block * m + j];
      c *= ipow(a[j], e) / factorial(e);
    }
    p.add_term(alpha, Multivector::scalar(m, c));
  });
  return p;
}

int MVPolynomial::degree() const {
  int d = -1;
  for (const auto& [alpha, c] : terms_) d = std::max(d, alpha.degree());
  return d;
}

int MVPolynomial::degree(int block) const {
  int d = -1;
  for (const auto& [alpha, c] : terms_) d = std::max(d, alpha.degree(block * m_, m_));
  return d;
}

double MVPolynomial::max_abs() const {
  double best = 0.0;
  for (const auto& [alpha, c] : terms_) best = std::max(best, c.max_abs());
  return best;
}

void MVPolynomial::add_term(const MonoIndex& alpha, const Multivector& c) {
  if (c.is_zero()) return;
  if (c.dim() != m_) throw Error("coefficient dimension mismatch");
  if (alpha.degree() > kMaxDegree)
    throw Error("polynomial degree exceeds the cap of " + std::to_string(kMaxDegree));
  if (alpha.degree(nvars_, kMaxVars - nvars_) != 0) throw Error("monomial uses undeclared variables");
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Multivector MVPolynomial::coeff(const MonoIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Multivector(m_) : it->second;
}

void MVPolynomial::check_compatible(const MVPolynomial& o) const {
  if (m_ != o.m_ || nvars_ != o.nvars_)
    throw Error("polynomial dimension mismatch: (m=" + std::to_string(m_) + ", n=" +
                std::to_string(nvars_) + ") vs (m=" + std::to_string(o.m_) + ", n=" +
                std::to_string(o.nvars_) + ")");
}

MVPolynomial& MVPolynomial::operator+=(const MVPolynomial& o) {
  check_compatible(o);
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, c);
  return *this;
}

MVPolynomial& MVPolynomial::operator-=(const MVPolynomial& o) {
  check_compatible(o);
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, -c);
  return *this;
}

MVPolynomial& MVPolynomial::operator*=(cplx c) {
  if (c == cplx{}) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

MVPolynomial operator*(const MVPolynomial& a, const MVPolynomial& b) {
  a.check_compatible(b);
  MVPolynomial out(a.m_, a.nvars_);
  for (const auto& [alpha, ca] : a.terms_)
    for (const auto& [beta, cb] : b.terms_) out.add_term(alpha + beta, ca * cb);
  return out;
}

MVPolynomial operator*(const Multivector& c, const MVPolynomial& p) {
  MVPolynomial out(p.m_, p.nvars_);
  for (const auto& [alpha, cp] : p.terms_) out.add_term(alpha, c * cp);
  return out;
}

MVPolynomial operator*(const MVPolynomial& p, const Multivector& c) {
  MVPolynomial out(p.m_, p.nvars_);
  for (const auto& [alpha, cp] : p.terms_) out.add_term(alpha, cp * c);
  return out;
}

double max_abs_diff(const MVPolynomial& a, const MVPolynomial& b) { return (a - b).max_abs(); }

MVPolynomial dagger(const MVPolynomial& p) {
  MVPolynomial out(p.dim(), p.nvars());
  for (const auto& [alpha, c] : p.terms()) out.add_term(alpha, c.dagger());
  return out;
}

Multivector evaluate(const MVPolynomial& p, const CVector& z) {
  if (z.dim() != p.nvars())
    throw Error("evaluate: point has " + std::to_string(z.dim()) + " components, polynomial has " +
                std::to_string(p.nvars()) + " variables");
  Multivector out(p.dim());
  for (const auto& [alpha, c] : p.terms()) {
    cplx mono = 1.0;
    for (int j = 0; j < p.nvars(); ++j) mono *= ipow(z[j], alpha[j]);
    out += c * mono;
  }
  return out;
}

MVPolynomial homogeneous_part(const MVPolynomial& p, int d, int block) {
  check_block(p, block);
  MVPolynomial out(p.dim(), p.nvars());
  for (const auto& [alpha, c] : p.terms())
    if (alpha.degree(block * p.dim(), p.dim()) == d) out.add_term(alpha, c);
  return out;
}

MVPolynomial partial(const MVPolynomial& p, int j) {
  if (j < 0 || j >= p.nvars()) throw Error("partial: variable index out of range");
  MVPolynomial out(p.dim(), p.nvars());
  for (const auto& [alpha, c] : p.terms()) {
    const int e = alpha[j];
    if (e == 0) continue;
    MonoIndex lowered = alpha;
    lowered.set(j, e - 1);
    out.add_term(lowered, c * static_cast<double>(e));
  }
  return out;
}

MVPolynomial dirac(const MVPolynomial& p, int block) {
  check_block(p, block);
  const int m = p.dim();
  MVPolynomial out(m, p.nvars());
  for (int j = 0; j < m; ++j) out += Multivector::unit(m, j + 1) * partial(p, block * m + j);
  return out;
}

MVPolynomial dirac_right(const MVPolynomial& p, int block) {
  check_block(p, block);
  const int m = p.dim();
  MVPolynomial out(m, p.nvars());
  for (int j = 0; j < m; ++j) out += partial(p, block * m + j) * Multivector::unit(m, j + 1);
  return out;
}

MVPolynomial euler(const MVPolynomial& p, int block) {
  check_block(p, block);
  MVPolynomial out(p.dim(), p.nvars());
  for (const auto& [alpha, c] : p.terms())
    out.add_term(alpha, c * static_cast<double>(alpha.degree(block * p.dim(), p.dim())));
  return out;
}

MVPolynomial gamma_op(const MVPolynomial& p, int block) {
  check_block(p, block);
  const int m = p.dim();
  const int off = block * m;
  MVPolynomial out(m, p.nvars());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const MVPolynomial xi = MVPolynomial::variable(m, p.nvars(), off + i);
      const MVPolynomial xj = MVPolynomial::variable(m, p.nvars(), off + j);
      const MVPolynomial rot = xi * partial(p, off + j) - xj * partial(p, off + i);
      out -= Multivector::blade(m, Blade((1u << i) | (1u << j))) * rot;
    }
  }
  return out;
}

MVPolynomial mul_vector_left(const MVPolynomial& p, int block) {
  return MVPolynomial::vector_field(p.dim(), p.nvars(), block) * p;
}

MVPolynomial mul_vector_right(const MVPolynomial& p, int block) {
  return p * MVPolynomial::vector_field(p.dim(), p.nvars(), block);
}

Multivector fischer_product(const MVPolynomial& r, const MVPolynomial& s) {
  if (r.dim() != s.dim() || r.nvars() != s.nvars()) throw Error("fischer_product: dimension mismatch");
  Multivector out(r.dim());
  for (const auto& [alpha, a] : r.terms()) {
    auto it = s.terms().find(alpha);
    if (it == s.terms().end()) continue;
    double weight = 1.0;
    for (int j = 0; j < r.nvars(); ++j) weight *= factorial(alpha[j]);
    out += (a.dagger() * it->second) * weight;
  }
  return out;
}

std::vector<MVPolynomial> fischer_decompose(const MVPolynomial& r, int block) {
  check_block(r, block);
  const int top = std::max(r.degree(block), 0);
  std::vector<MVPolynomial> h(static_cast<std::size_t>(top) + 1, MVPolynomial(r.dim(), r.nvars()));
  for (int d = 0; d <= top; ++d) {
    const MVPolynomial part = homogeneous_part(r, d, block);
    if (part.is_zero()) continue;
    const auto comps = decompose_homogeneous(part, d, block);
    for (std::size_t l = 0; l < comps.size(); ++l) h[l] += comps[l];
  }
  return h;
}

MVPolynomial monogenic_projection(const MVPolynomial& r, int block) {
  return fischer_decompose(r, block).front();
}

DivisionResult divide_by_norm_squared(const MVPolynomial& p, int block) {
  check_block(p, block);
  const int m = p.dim();
  const int lead = block * m;
  MVPolynomial norm2(m, p.nvars());
  for (int j = 0; j < m; ++j) {
    MonoIndex sq;
    sq.set(lead + j, 2);
    norm2.add_term(sq, Multivector::scalar(m, 1.0));
  }
  MVPolynomial rem = p;
  MVPolynomial quot(m, p.nvars());
  for (;;) {
    // Largest monomial with x_lead^2 | x^alpha is reduced first; this strictly
    // lowers the x_lead exponent of everything it produces.
    auto it = std::find_if(rem.terms().rbegin(), rem.terms().rend(),
                           [&](const auto& t) { return t.first[lead] >= 2; });
    if (it == rem.terms().rend()) break;
    MonoIndex q = it->first;
    q.set(lead, q[lead] - 2);
    MVPolynomial step(m, p.nvars());
    step.add_term(q, it->second);
    quot += step;
    rem -= step * norm2;
  }
  return {std::move(quot), std::move(rem)};
}

MVPolynomial substitute_ray(const MVPolynomial& p, const CVector& w, const CVector& a, int block) {
  check_block(p, block);
  const int m = p.dim();
  const int off = block * m;
  if (w.dim() != m || a.dim() != m) throw Error("substitute_ray: dimension mismatch");

  // Group by (block degree, remaining monomial) after collapsing x^beta -> w^beta.
  std::map<std::pair<int, MonoIndex>, Multivector> grouped;
  for (const auto& [alpha, c] : p.terms()) {
    cplx scale = 1.0;
    MonoIndex rest = alpha;
    int d = 0;
    for (int j = 0; j < m; ++j) {
      const int e = alpha[off + j];
      scale *= ipow(w[j], e);
      d += e;
      rest.set(off + j, 0);
    }
    auto [it, inserted] = grouped.try_emplace({d, rest}, Multivector(m));
    it->second += c * scale;
  }

  MVPolynomial out(m, p.nvars());
  std::map<int, MVPolynomial> powers;
  for (const auto& [key, c] : grouped) {
    const auto& [d, rest] = key;
    auto pit = powers.find(d);
    if (pit == powers.end())
      pit = powers.emplace(d, MVPolynomial::linear_form_power(m, p.nvars(), a, d, block)).first;
    for (const auto& [gamma, g] : pit->second.terms()) out.add_term(gamma + rest, g * c);
  }
  return out;
}

MVPolynomial embed(const MVPolynomial& p, int nvars, int offset) {
  if (offset < 0 || offset + p.nvars() > nvars) throw Error("embed: target too small");
  MVPolynomial out(p.dim(), nvars);
  for (const auto& [alpha, c] : p.terms()) {
    MonoIndex shifted;
    for (int j = 0; j < p.nvars(); ++j) shifted.set(offset + j, alpha[j]);
    out.add_term(shifted, c);
  }
  return out;
}

MVPolynomial truncate_vars(const MVPolynomial& p, int nvars) {
  MVPolynomial out(p.dim(), nvars);
  for (const auto& [alpha, c] : p.terms()) {
    if (alpha.degree(nvars, kMaxVars - nvars) != 0)
      throw Error("truncate_vars: dropped variable still occurs");
    out.add_term(alpha, c);
  }
  return out;
}

MVPolynomial swap_blocks(const MVPolynomial& p, int b0, int b1) {
  check_block(p, b0);
  check_block(p, b1);
  const int m = p.dim();
  MVPolynomial out(m, p.nvars());
  for (const auto& [alpha, c] : p.terms()) {
    MonoIndex swapped = alpha;
    for (int j = 0; j < m; ++j) {
      swapped.set(b0 * m + j, alpha[b1 * m + j]);
      swapped.set(b1 * m + j, alpha[b0 * m + j]);
    }
    out.add_term(swapped, c);
  }
  return out;
}

}  // namespace cliffrad
