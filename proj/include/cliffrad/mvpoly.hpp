#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "cliffrad/clifford.hpp"

namespace cliffrad {

/// Maximum number of polynomial variables (two blocks of m <= 8).
inline constexpr int kMaxVars = 16;
/// Maximum total degree of any stored monomial.
inline constexpr int kMaxDegree = 12;

/// Exponent vector alpha of the monomial x^alpha.
class MonoIndex {
public:
  constexpr MonoIndex() = default;
  explicit MonoIndex(std::span<const int> exponents);

  int operator[](int j) const { return e_[static_cast<std::size_t>(j)]; }
  void set(int j, int value);
  int degree() const;
  /// Degree restricted to variables [offset, offset + count).
  int degree(int offset, int count) const;
  std::vector<int> exponents(int nvars) const;

  friend MonoIndex operator+(const MonoIndex& a, const MonoIndex& b);
  friend auto operator<=>(const MonoIndex&, const MonoIndex&) = default;

private:
  std::array<std::uint8_t, kMaxVars> e_{};
};

/// Polynomial in `nvars` real (or complexified) variables with Multivector
/// coefficients in C_m. Variables are grouped in blocks of m; block b covers
/// variables [b*m, (b+1)*m). Single-function polynomials use nvars == m; kernels
/// K(u, x) use two blocks (u first).
class MVPolynomial {
public:
  using TermMap = std::map<MonoIndex, Multivector>;

  MVPolynomial() = default;
  MVPolynomial(int m, int nvars);
  explicit MVPolynomial(int m) : MVPolynomial(m, m) {}

  static MVPolynomial constant(int m, int nvars, const Multivector& c);
  /// The coordinate x_j (0-based variable index) with scalar coefficient 1.
  static MVPolynomial variable(int m, int nvars, int j);
  /// The vector field x = sum_j x_j e_j over block `block`.
  static MVPolynomial vector_field(int m, int nvars, int block = 0);
  /// <x, a> over block `block`, a scalar-valued linear form.
  static MVPolynomial linear_form(int m, int nvars, const CVector& a, int block = 0);
  /// <x, a>^k expanded by the multinomial theorem.
  static MVPolynomial linear_form_power(int m, int nvars, const CVector& a, int k, int block = 0);

  int dim() const { return m_; }
  int nvars() const { return nvars_; }
  int nblocks() const { return m_ == 0 ? 0 : nvars_ / m_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree, or -1 for the zero polynomial.
  int degree() const;
  /// Degree in the variables of one block, or -1 for zero.
  int degree(int block) const;
  double max_abs() const;

  void add_term(const MonoIndex& alpha, const Multivector& c);
  Multivector coeff(const MonoIndex& alpha) const;

  MVPolynomial& operator+=(const MVPolynomial& o);
  MVPolynomial& operator-=(const MVPolynomial& o);
  MVPolynomial& operator*=(cplx c);

  friend MVPolynomial operator+(MVPolynomial a, const MVPolynomial& b) { return a += b; }
  friend MVPolynomial operator-(MVPolynomial a, const MVPolynomial& b) { return a -= b; }
  friend MVPolynomial operator*(MVPolynomial a, cplx c) { return a *= c; }
  friend MVPolynomial operator*(cplx c, MVPolynomial a) { return a *= c; }
  /// Product with Clifford coefficients multiplied in order (a's on the left).
  friend MVPolynomial operator*(const MVPolynomial& a, const MVPolynomial& b);
  friend MVPolynomial operator*(const Multivector& c, const MVPolynomial& p);
  friend MVPolynomial operator*(const MVPolynomial& p, const Multivector& c);

private:
  void check_compatible(const MVPolynomial& o) const;

  int m_ = 0;
  int nvars_ = 0;
  TermMap terms_;
};

double max_abs_diff(const MVPolynomial& a, const MVPolynomial& b);

/// Coefficient-wise dagger; the variables are treated as real.
MVPolynomial dagger(const MVPolynomial& p);

/// Evaluates at a complex point with one component per variable.
Multivector evaluate(const MVPolynomial& p, const CVector& z);

/// Part of p homogeneous of degree d in the variables of `block`.
MVPolynomial homogeneous_part(const MVPolynomial& p, int d, int block = 0);

/// Partial derivative in variable j (0-based, absolute index).
MVPolynomial partial(const MVPolynomial& p, int j);

/// Left Dirac operator sum_j e_j d/dx_j over block `block`.
MVPolynomial dirac(const MVPolynomial& p, int block = 0);
/// Right Dirac operator sum_j (d/dx_j p) e_j.
MVPolynomial dirac_right(const MVPolynomial& p, int block = 0);
/// Euler operator sum_j x_j d/dx_j over block `block`.
MVPolynomial euler(const MVPolynomial& p, int block = 0);
/// Gamma operator -sum_{i<j} e_i e_j (x_i d_j - x_j d_i) over block `block`.
MVPolynomial gamma_op(const MVPolynomial& p, int block = 0);

/// x * p and p * x for the vector field of `block`.
MVPolynomial mul_vector_left(const MVPolynomial& p, int block = 0);
MVPolynomial mul_vector_right(const MVPolynomial& p, int block = 0);

/// [r, s] = r(d)^dagger s(x) at x = 0; on monomials delta_{ab} alpha! a^dagger b.
Multivector fischer_product(const MVPolynomial& r, const MVPolynomial& s);

/// Components (h_0, h_1, ...) with r = sum_l x^l h_l, each h_l left monogenic in
/// `block`; the other blocks act as parameters.
std::vector<MVPolynomial> fischer_decompose(const MVPolynomial& r, int block = 0);

/// h_0 of the Fischer decomposition.
MVPolynomial monogenic_projection(const MVPolynomial& r, int block = 0);

struct DivisionResult {
  MVPolynomial quotient;
  MVPolynomial remainder;
};

/// Divides by |x|^2 over `block`; exact iff the remainder is zero.
DivisionResult divide_by_norm_squared(const MVPolynomial& p, int block = 0);

/// Substitutes x_block -> w * <u, a> where u takes over the block's variables.
/// Multivector coefficients are untouched since the substituted values are scalars.
MVPolynomial substitute_ray(const MVPolynomial& p, const CVector& w, const CVector& a,
                            int block = 0);

/// Moves the variables of a polynomial into a wider variable set at `offset`.
MVPolynomial embed(const MVPolynomial& p, int nvars, int offset);
/// Drops trailing variables; throws if any of them occurs.
MVPolynomial truncate_vars(const MVPolynomial& p, int nvars);
/// Exchanges the variables of two blocks.
MVPolynomial swap_blocks(const MVPolynomial& p, int b0, int b1);

}  // namespace cliffrad
