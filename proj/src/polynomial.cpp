#include "salemlat/polynomial.hpp"

#include <algorithm>

namespace salemlat {

IntPolynomial::IntPolynomial(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> ascending) {
  for (long long c : ascending) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::monomial(int degree, const Integer& c) {
  std::vector<Integer> v(static_cast<size_t>(degree + 1), Integer(0));
  v.back() = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<size_t>(k)];
}

const Integer& IntPolynomial::leading() const {
  if (is_zero()) throw PreconditionError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Integer IntPolynomial::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) g = bmp::gcd(g, c);
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return *this;
  Integer g = content();
  if (leading().sign() < 0) g = -g;
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c / g);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::derivative() const {
  if (degree() <= 0) return {};
  std::vector<Integer> out;
  for (size_t k = 1; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] * static_cast<long long>(k));
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::reversed() const {
  return IntPolynomial(std::vector<Integer>(coeffs_.rbegin(), coeffs_.rend()));
}

IntPolynomial IntPolynomial::negated_variable() const {
  std::vector<Integer> out = coeffs_;
  for (size_t k = 1; k < out.size(); k += 2) out[k] = -out[k];
  return IntPolynomial(std::move(out));
}

Integer IntPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

int IntPolynomial::sign_at(const Rational& x) const {
  // d^n p(a/d) = Σ c_k a^k d^(n-k) with d > 0 shares the sign of p(a/d).
  const Integer a = numerator(x), d = denominator(x);
  Integer acc = 0;
  Integer d_power = 1;
  // Horner in homogeneous form: acc_{k} = acc_{k+1} * a + c_k * d^(n-k).
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * a + *it * d_power;
    d_power *= d;
  }
  return acc.sign();
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Integer(0));
  for (size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) { return *this += -other; }

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> out(coeffs_.size() + other.coeffs_.size() - 1, Integer(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

bool operator<(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  // Lexicographic on the coefficient tuple, ascending degree order.
  return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(), b.coeffs_.end());
}

std::string IntPolynomial::to_string(char variable) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Integer& c = coeffs_[static_cast<size_t>(k)];
    if (c == 0) continue;
    const bool negative = c.sign() < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1 || k == 0) out += magnitude.str();
    if (k >= 1) out += variable;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

std::optional<IntPolynomial> exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
  if (a.is_zero()) return IntPolynomial{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Integer> rem = a.coefficients();
  std::vector<Integer> quot(static_cast<size_t>(a.degree() - b.degree() + 1), Integer(0));
  const Integer& lead = b.leading();
  const auto& bc = b.coefficients();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const Integer& top = rem[static_cast<size_t>(k + b.degree())];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    const Integer q = top / lead;
    quot[static_cast<size_t>(k)] = q;
    for (size_t j = 0; j < bc.size(); ++j) rem[static_cast<size_t>(k) + j] -= q * bc[j];
  }
  for (const auto& c : rem) {
    if (c != 0) return std::nullopt;
  }
  return IntPolynomial(std::move(quot));
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw PreconditionError("pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> rem = a.coefficients();
  const Integer& lead = b.leading();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  for (int top = a.degree(); top >= db; --top) {
    const Integer t = rem[static_cast<size_t>(top)];
    for (auto& c : rem) c *= lead;
    if (t != 0) {
      const int shift = top - db;
      for (size_t j = 0; j < bc.size(); ++j) rem[static_cast<size_t>(shift) + j] -= t * bc[j];
    }
  }
  return IntPolynomial(std::move(rem));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return b.primitive_part() * b.content();
  if (b.is_zero()) return a.primitive_part() * a.content();
  const Integer content = bmp::gcd(a.content(), b.content());
  IntPolynomial x = a.primitive_part(), y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.is_zero() ? r : r.primitive_part();
  }
  return x.primitive_part() * content;
}

std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p) {
  std::vector<std::pair<IntPolynomial, int>> out;
  if (p.degree() <= 0) return out;
  const IntPolynomial f = p.primitive_part();
  IntPolynomial c = gcd(f, f.derivative()).primitive_part();
  IntPolynomial w = *exact_divide(f, c);
  int multiplicity = 1;
  while (w.degree() > 0) {
    IntPolynomial y = gcd(w, c).primitive_part();
    IntPolynomial z = *exact_divide(w, y);
    if (z.degree() > 0) out.emplace_back(z.primitive_part(), multiplicity);
    ++multiplicity;
    w = y;
    c = *exact_divide(c, y);
  }
  return out;
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() <= 0) return p.primitive_part();
  const IntPolynomial f = p.primitive_part();
  return exact_divide(f, gcd(f, f.derivative()).primitive_part())->primitive_part();
}

IntPolynomial power(const IntPolynomial& p, int e) {
  IntPolynomial out = IntPolynomial::constant(1);
  for (int i = 0; i < e; ++i) out *= p;
  return out;
}

}  // namespace salemlat
