#include "salemlat/polyalg.hpp"

#include <algorithm>
#include <numeric>

namespace salemlat {

unsigned long long euler_phi(unsigned long long n) {
  if (n == 0) throw PreconditionError("euler_phi needs n >= 1");
  unsigned long long result = n;
  for (unsigned long long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

int mobius(unsigned long long n) {
  int mu = 1;
  for (unsigned long long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

IntPolynomial x_power_minus_one(unsigned long long d) {
  std::vector<Integer> c(d + 1, Integer(0));
  c[0] = -1;
  c[d] = 1;
  return IntPolynomial(std::move(c));
}

Integer binomial(int n, int k) {
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Coefficients of g(y) with g(x^2) = (-1)^n p(x) p(-x).
IntPolynomial graeffe_step(const IntPolynomial& p) {
  const auto& c = p.coefficients();
  std::vector<Integer> even, odd;
  for (std::size_t k = 0; k < c.size(); ++k) (k % 2 == 0 ? even : odd).push_back(c[k]);
  IntPolynomial e(even), o(odd);
  IntPolynomial g = e * e - IntPolynomial::monomial(1) * o * o;
  if (p.degree() % 2 == 1) g = -g;
  return g;
}

}  // namespace

IntPolynomial cyclotomic_polynomial(unsigned long long n) {
  if (n == 0) throw PreconditionError("cyclotomic_polynomial needs n >= 1");
  IntPolynomial num = IntPolynomial::constant(1), den = IntPolynomial::constant(1);
  for (unsigned long long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    int mu = mobius(n / d);
    if (mu == 1) num *= x_power_minus_one(d);
    if (mu == -1) den *= x_power_minus_one(d);
  }
  return *exact_divide(num, den);
}

std::vector<unsigned long long> cyclotomic_indices_up_to_degree(int degree) {
  std::vector<unsigned long long> out;
  if (degree < 1) return out;
  // phi(n) >= sqrt(n/2), so phi(n) <= D forces n <= 2 D^2.
  const unsigned long long limit = 2ULL * static_cast<unsigned long long>(degree) * degree + 2;
  for (unsigned long long n = 1; n <= limit; ++n) {
    if (euler_phi(n) <= static_cast<unsigned long long>(degree)) out.push_back(n);
  }
  return out;
}

bool is_cyclotomic_product(const IntPolynomial& p) {
  if (!p.is_monic()) throw PreconditionError("is_cyclotomic_product needs a monic polynomial");
  const int n = p.degree();
  if (n == 0) return true;
  if (p.constant_term() == 0) return false;
  // Squaring the roots permutes a finite set of roots of unity, so the
  // sequence is eventually periodic; anything else escapes the binomial box.
  std::vector<IntPolynomial> seen{p};
  IntPolynomial current = p;
  const int bound = 2 * n + 8;
  for (int step = 0; step < bound; ++step) {
    current = graeffe_step(current);
    for (int k = 0; k <= n; ++k) {
      if (abs(current.coefficient(k)) > binomial(n, n - k)) return false;
    }
    if (std::find(seen.begin(), seen.end(), current) != seen.end()) return true;
    seen.push_back(current);
  }
  return false;
}

std::optional<unsigned long long> cyclotomic_order(const IntPolynomial& p) {
  if (!p.is_monic() || p.degree() < 1) throw PreconditionError("cyclotomic_order needs a monic polynomial");
  for (unsigned long long n : cyclotomic_indices_up_to_degree(p.degree())) {
    if (euler_phi(n) != static_cast<unsigned long long>(p.degree())) continue;
    if (cyclotomic_polynomial(n) == p) return n;
  }
  return std::nullopt;
}

IntPolynomial trace_polynomial_of_palindrome(const IntPolynomial& p) {
  const int deg = p.degree();
  if (deg < 0 || deg % 2 != 0) throw PreconditionError("trace polynomial needs even degree");
  const int n = deg / 2;
  // x^{-n} p(x) = c_n + sum_k c_{n+k} (x^k + x^{-k}) and x^k + x^{-k} = D_k(y)
  // with D_0 = 2, D_1 = y, D_k = y D_{k-1} - D_{k-2}.
  IntPolynomial q = IntPolynomial::constant(p.coefficient(n));
  IntPolynomial d_prev = IntPolynomial::constant(2), d_cur = IntPolynomial::monomial(1);
  const IntPolynomial y = IntPolynomial::monomial(1);
  for (int k = 1; k <= n; ++k) {
    q += d_cur * p.coefficient(n + k);
    IntPolynomial d_next = y * d_cur - d_prev;
    d_prev = std::move(d_cur);
    d_cur = std::move(d_next);
  }
  return q;
}

IntPolynomial trace_polynomial(const IntPolynomial& p) {
  if (p.is_zero() || !is_reciprocal(p)) throw PreconditionError("trace polynomial needs a reciprocal polynomial");
  if (p.degree() % 2 != 0) throw PreconditionError("trace polynomial needs even degree");
  if (!p.is_monic()) throw PreconditionError("trace polynomial needs a monic polynomial");
  return trace_polynomial_of_palindrome(p);
}

}  // namespace salemlat
