#include "cliffrad/clifford.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace cliffrad {

namespace {

void check_dim(int m) {
  if (m < 1 || m > kMaxDim)
    throw Error("Clifford dimension must be in 1.." + std::to_string(kMaxDim) +
                ", got " + std::to_string(m));
}

void check_same_dim(int a, int b) {
  if (a != b)
    throw Error("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

Blade Blade::from_indices(std::span<const int> indices, int m) {
  std::uint32_t mask = 0;
  int prev = 0;
  for (int i : indices) {
    if (i < 1 || i > m) throw Error("blade index " + std::to_string(i) + " outside 1.." + std::to_string(m));
    if (i <= prev) throw Error("blade indices must be strictly ascending");
    prev = i;
    mask |= 1u << (i - 1);
  }
  return Blade(mask);
}

int Blade::grade() const { return std::popcount(mask_); }

std::vector<int> Blade::indices() const {
  std::vector<int> out;
  for (std::uint32_t rest = mask_; rest != 0; rest &= rest - 1)
    out.push_back(std::countr_zero(rest) + 1);
  return out;
}

int blade_product_sign(Blade a, Blade b) {
  // Moving each factor of b left past the higher factors of a.
  int swaps = 0;
  for (std::uint32_t rest = a.mask() >> 1; rest != 0; rest >>= 1)
    swaps += std::popcount(rest & b.mask());
  // Each shared index contributes e_j e_j = -1.
  swaps += std::popcount(a.mask() & b.mask());
  return (swaps & 1) ? -1 : 1;
}

int blade_dagger_sign(Blade a) {
  const int r = a.grade();
  const int exponent = r + r * (r - 1) / 2;
  return (exponent & 1) ? -1 : 1;
}

Multivector::Multivector(int m) : m_(m) { check_dim(m); }

Multivector Multivector::scalar(int m, cplx c) { return blade(m, Blade{}, c); }

Multivector Multivector::blade(int m, Blade b, cplx c) {
  Multivector out(m);
  if (b.mask() >> m) throw Error("blade outside dimension");
  out.add_term(b, c);
  return out;
}

Multivector Multivector::unit(int m, int j) {
  if (j < 1 || j > m) throw Error("unit vector index out of range");
  return blade(m, Blade(1u << (j - 1)));
}

cplx Multivector::coeff(Blade b) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), b,
                             [](const Term& t, Blade key) { return t.first < key; });
  return (it != terms_.end() && it->first == b) ? it->second : cplx{};
}

double Multivector::max_abs() const {
  double best = 0.0;
  for (const auto& [b, c] : terms_) best = std::max(best, std::abs(c));
  return best;
}

Multivector Multivector::dagger() const {
  Multivector out = *this;
  for (auto& [b, c] : out.terms_) c = std::conj(c) * static_cast<double>(blade_dagger_sign(b));
  return out;
}

Multivector Multivector::conj() const {
  Multivector out = *this;
  for (auto& [b, c] : out.terms_) c = std::conj(c);
  return out;
}

void Multivector::add_term(Blade b, cplx c) {
  if (c == cplx{}) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), b,
                             [](const Term& t, Blade key) { return t.first < key; });
  if (it != terms_.end() && it->first == b) {
    it->second += c;
    if (it->second == cplx{}) terms_.erase(it);
  } else {
    terms_.insert(it, {b, c});
  }
}

Multivector& Multivector::operator+=(const Multivector& o) {
  if (o.terms_.empty()) return *this;
  if (m_ == 0) m_ = o.m_;
  check_same_dim(m_, o.m_);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      const cplx sum = a->second + b->second;
      if (sum != cplx{}) merged.emplace_back(a->first, sum);
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) { return *this += o * -1.0; }

Multivector& Multivector::operator*=(cplx c) {
  if (c == cplx{}) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  normalize();
  return *this;
}

Multivector operator*(const Multivector& a, const Multivector& b) {
  if (a.terms_.empty() || b.terms_.empty()) {
    if (a.m_ != 0 && b.m_ != 0) check_same_dim(a.m_, b.m_);
    return Multivector(a.m_ != 0 ? a.m_ : b.m_);
  }
  check_same_dim(a.m_, b.m_);
  std::vector<Multivector::Term> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ba, ca] : a.terms_)
    for (const auto& [bb, cb] : b.terms_)
      prods.emplace_back(Blade(ba.mask() ^ bb.mask()),
                         ca * cb * static_cast<double>(blade_product_sign(ba, bb)));
  return Multivector::from_terms(a.m_, std::move(prods));
}

Multivector Multivector::from_terms(int m, std::vector<Term> terms) {
  Multivector out(m);
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.first < y.first; });
  for (const auto& t : terms) {
    if (t.first.mask() >> m) throw Error("blade outside dimension");
    if (!out.terms_.empty() && out.terms_.back().first == t.first)
      out.terms_.back().second += t.second;
    else
      out.terms_.push_back(t);
  }
  out.normalize();
  return out;
}

void Multivector::normalize() {
  std::erase_if(terms_, [](const Term& t) { return t.second == cplx{}; });
}

Multivector geometric_product(const Multivector& a, const Multivector& b) { return a * b; }

double max_abs_diff(const Multivector& a, const Multivector& b) {
  return (a - b).max_abs();
}

bool approx_equal(const Multivector& a, const Multivector& b, double tol) {
  return max_abs_diff(a, b) <= tol;
}

CVector::CVector(std::span<const double> real) : z_(real.begin(), real.end()) {}

CVector CVector::unit(int m, int j) {
  CVector out = zeros(m);
  out[j - 1] = 1.0;
  return out;
}

Multivector CVector::to_multivector() const {
  const int m = dim();
  Multivector out(m);
  for (int j = 0; j < m; ++j) out.add_term(Blade(1u << j), z_[static_cast<std::size_t>(j)]);
  return out;
}

CVector operator+(const CVector& a, const CVector& b) {
  check_same_dim(a.dim(), b.dim());
  CVector out = a;
  for (int j = 0; j < a.dim(); ++j) out[j] += b[j];
  return out;
}

CVector operator-(const CVector& a, const CVector& b) { return a + (-1.0) * b; }

CVector operator*(cplx c, const CVector& a) {
  CVector out = a;
  for (auto& z : out.z_) z *= c;
  return out;
}

cplx pairing(const CVector& a, const CVector& b) {
  check_same_dim(a.dim(), b.dim());
  cplx sum{};
  for (int j = 0; j < a.dim(); ++j) sum += a[j] * b[j];
  return sum;
}

Multivector wedge(const CVector& a, const CVector& b) {
  check_same_dim(a.dim(), b.dim());
  const int m = a.dim();
  Multivector out(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      out.add_term(Blade((1u << i) | (1u << j)), a[i] * b[j] - a[j] * b[i]);
  return out;
}

CVector NullFrame::tau_vector() const {
  CVector out = CVector::zeros(dim());
  for (int j = 0; j < dim(); ++j) out[j] = cplx(t_[static_cast<std::size_t>(j)], s_[static_cast<std::size_t>(j)]);
  return out;
}

CVector NullFrame::tau_dagger_vector() const {
  CVector out = CVector::zeros(dim());
  for (int j = 0; j < dim(); ++j) out[j] = cplx(-t_[static_cast<std::size_t>(j)], s_[static_cast<std::size_t>(j)]);
  return out;
}

NullFrame make_null_frame(std::vector<double> t, std::vector<double> s) {
  constexpr double tol = 1e-10;
  if (t.size() != s.size()) throw Error("null frame: t and s differ in length");
  const int m = static_cast<int>(t.size());
  check_dim(m);
  double tt = 0.0, ss = 0.0, ts = 0.0;
  for (std::size_t j = 0; j < t.size(); ++j) {
    tt += t[j] * t[j];
    ss += s[j] * s[j];
    ts += t[j] * s[j];
  }
  if (std::abs(tt - 1.0) > tol || std::abs(ss - 1.0) > tol)
    throw Error("null frame: t and s must be unit vectors");
  if (std::abs(ts) > tol) throw Error("null frame: t and s must be orthogonal");

  NullFrame f;
  f.t_ = std::move(t);
  f.s_ = std::move(s);
  f.tau_ = f.tau_vector().to_multivector();
  f.tau_dagger_ = f.tau_dagger_vector().to_multivector();
  f.quarter_ttd_ = (f.tau_ * f.tau_dagger_) * 0.25;
  return f;
}

}  // namespace cliffrad
