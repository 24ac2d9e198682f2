#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cliffrad {

using cplx = std::complex<double>;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Largest supported number of generators e_1..e_m.
inline constexpr int kMaxDim = 16;

// Canonical blade: bit j-1 set <=> e_j is a factor; factors in ascending order.
class Blade {
public:
  constexpr Blade() = default;
  constexpr explicit Blade(std::uint32_t mask) : mask_(mask) {}

  /// Builds from 1-based indices; they must be strictly ascending and <= m.
  static Blade from_indices(std::span<const int> indices, int m);

  constexpr std::uint32_t mask() const { return mask_; }
  int grade() const;
  std::vector<int> indices() const;

  friend constexpr auto operator<=>(Blade, Blade) = default;

private:
  std::uint32_t mask_ = 0;
};

/// Sign of e_A e_B = sign * e_{A xor B} under e_j^2 = -1.
int blade_product_sign(Blade a, Blade b);

/// Sign s with (e_A)^dagger = s e_A.
int blade_dagger_sign(Blade a);

/// Element of the complex Clifford algebra C_m, stored sparsely as
/// (blade, coefficient) pairs sorted by blade mask. Exact zeros are dropped.
class Multivector {
public:
  using Term = std::pair<Blade, cplx>;

  Multivector() = default;
  explicit Multivector(int m);

  static Multivector scalar(int m, cplx c);
  static Multivector blade(int m, Blade b, cplx c = 1.0);
  /// e_j, 1-based.
  static Multivector unit(int m, int j);

  int dim() const { return m_; }
  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  cplx coeff(Blade b) const;
  cplx scalar_part() const { return coeff(Blade{}); }
  double max_abs() const;

  Multivector dagger() const;
  Multivector conj() const;

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(cplx c);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(Multivector a) { return a *= -1.0; }
  friend Multivector operator*(Multivector a, cplx c) { return a *= c; }
  friend Multivector operator*(cplx c, Multivector a) { return a *= c; }
  /// Geometric product.
  friend Multivector operator*(const Multivector& a, const Multivector& b);

  /// Adds c * e_B in place.
  void add_term(Blade b, cplx c);

  // Builds from unsorted terms; duplicates are summed.
  static Multivector from_terms(int m, std::vector<Term> terms);

private:
  void normalize();

  int m_ = 0;
  std::vector<Term> terms_;
};

Multivector geometric_product(const Multivector& a, const Multivector& b);
inline Multivector dagger(const Multivector& a) { return a.dagger(); }

/// Largest coefficient-wise |a_B - b_B|.
double max_abs_diff(const Multivector& a, const Multivector& b);
bool approx_equal(const Multivector& a, const Multivector& b, double tol = 1e-12);

/// Complex 1-vector (z_1, ..., z_m), identified with sum_j e_j z_j.
class CVector {
public:
  CVector() = default;
  explicit CVector(std::vector<cplx> components) : z_(std::move(components)) {}
  explicit CVector(std::span<const double> real);
  static CVector zeros(int m) { return CVector(std::vector<cplx>(static_cast<std::size_t>(m))); }
  /// The real unit vector e_j, 1-based.
  static CVector unit(int m, int j);

  int dim() const { return static_cast<int>(z_.size()); }
  std::span<const cplx> components() const { return z_; }
  cplx operator[](int j) const { return z_[static_cast<std::size_t>(j)]; }
  cplx& operator[](int j) { return z_[static_cast<std::size_t>(j)]; }

  Multivector to_multivector() const;

  friend CVector operator+(const CVector& a, const CVector& b);
  friend CVector operator-(const CVector& a, const CVector& b);
  friend CVector operator*(cplx c, const CVector& a);

private:
  std::vector<cplx> z_;
};

/// Bilinear (not Hermitian) pairing sum_j a_j b_j.
cplx pairing(const CVector& a, const CVector& b);

/// a ^ b = sum_{i<j} (a_i b_j - a_j b_i) e_ij.
Multivector wedge(const CVector& a, const CVector& b);

/// Orthonormal real 2-frame (t, s); tau = t + i s lies on the complex nullcone.
class NullFrame {
public:
  const std::vector<double>& t() const { return t_; }
  const std::vector<double>& s() const { return s_; }
  int dim() const { return static_cast<int>(t_.size()); }

  CVector tau_vector() const;         // t + i s
  CVector tau_dagger_vector() const;  // -t + i s
  const Multivector& tau() const { return tau_; }
  const Multivector& tau_dagger() const { return tau_dagger_; }
  /// tau tau^dagger / 4, the common left factor of every kernel.
  const Multivector& quarter_tau_tau_dagger() const { return quarter_ttd_; }

  friend NullFrame make_null_frame(std::vector<double> t, std::vector<double> s);

private:
  NullFrame() = default;

  std::vector<double> t_, s_;
  Multivector tau_, tau_dagger_, quarter_ttd_;
};

/// Validates |t| = |s| = 1 and t . s = 0 to within 1e-10; throws Error otherwise.
NullFrame make_null_frame(std::vector<double> t, std::vector<double> s);

}  // namespace cliffrad
