#pragma once

#include "salemlat/numeric.hpp"

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace salemlat {

/// Polynomial with arbitrary-precision integer coefficients, stored in
/// ascending degree order.  The zero polynomial has no coefficients and
/// degree -1; otherwise the leading coefficient is non-zero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> ascending);
  IntPolynomial(std::initializer_list<long long> ascending);

  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(int degree, const Integer& c = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer coefficient(int k) const;
  const Integer& leading() const;
  Integer constant_term() const { return coefficient(0); }

  Integer content() const;
  IntPolynomial primitive_part() const;
  IntPolynomial derivative() const;
  /// x^deg · p(1/x).
  IntPolynomial reversed() const;
  /// p(-x).
  IntPolynomial negated_variable() const;

  Integer evaluate(const Integer& x) const;
  Rational evaluate(const Rational& x) const;
  /// Sign of p at a rational point, computed without building the value.
  int sign_at(const Rational& x) const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const IntPolynomial& other);
  IntPolynomial& operator*=(const Integer& scalar);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator*(IntPolynomial a, const Integer& s) { return a *= s; }
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator<(const IntPolynomial& a, const IntPolynomial& b);

  /// Human-readable form, e.g. "x^4 - x^3 - x^2 - x + 1".
  std::string to_string(char variable = 'x') const;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

/// Quotient when b divides a in Z[x]; nullopt otherwise.
std::optional<IntPolynomial> exact_divide(const IntPolynomial& a, const IntPolynomial& b);

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) · a mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Greatest common divisor in Z[x], with positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// p = c · Π f_i^{m_i} with primitive, pairwise coprime, squarefree f_i
/// (positive leading coefficients); returns the (f_i, m_i).
std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p);

/// p / gcd(p, p'), primitive.
IntPolynomial squarefree_part(const IntPolynomial& p);

/// p ^ e.
IntPolynomial power(const IntPolynomial& p, int e);

}  // namespace salemlat
