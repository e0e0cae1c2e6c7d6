#include "salemlat/polyalg.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <random>
#include <set>

namespace salemlat {

namespace {

// Dense polynomials over Z/pZ, ascending, entries in [0, p), no trailing zeros.
using ModPoly = std::vector<Integer>;

struct ModRing {
  Integer p;

  Integer reduce(const Integer& x) const {
    Integer r = x % p;
    if (r.sign() < 0) r += p;
    return r;
  }
  Integer inverse(const Integer& x) const {
    Integer r;
    mpz_invert(r.backend().data(), reduce(x).backend().data(), p.backend().data());
    return r;
  }
  void trim(ModPoly& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  ModPoly from(const IntPolynomial& f) const {
    ModPoly a;
    for (const auto& c : f.coefficients()) a.push_back(reduce(c));
    trim(a);
    return a;
  }
  ModPoly sub(ModPoly a, const ModPoly& b) const {
    if (a.size() < b.size()) a.resize(b.size(), Integer(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = reduce(a[i] - b[i]);
    trim(a);
    return a;
  }
  ModPoly mul(const ModPoly& a, const ModPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ModPoly c(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    for (auto& x : c) x = reduce(x);
    trim(c);
    return c;
  }
  /// Quotient and remainder of a by non-zero b.
  std::pair<ModPoly, ModPoly> divmod(ModPoly a, const ModPoly& b) const {
    if (a.size() < b.size()) return {{}, a};
    const Integer inv = inverse(b.back());
    ModPoly q(a.size() - b.size() + 1, Integer(0));
    for (std::size_t k = q.size(); k-- > 0;) {
      Integer coef = reduce(a[k + b.size() - 1] * inv);
      q[k] = coef;
      if (coef == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = reduce(a[k + j] - coef * b[j]);
    }
    trim(a);
    trim(q);
    return {q, a};
  }
  ModPoly mod(const ModPoly& a, const ModPoly& b) const { return divmod(a, b).second; }
  ModPoly monic(ModPoly a) const {
    if (a.empty()) return a;
    const Integer inv = inverse(a.back());
    for (auto& x : a) x = reduce(x * inv);
    return a;
  }
  ModPoly gcd(ModPoly a, ModPoly b) const {
    while (!b.empty()) {
      ModPoly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  ModPoly powmod(ModPoly base, Integer e, const ModPoly& m) const {
    ModPoly result{Integer(1)};
    base = mod(base, m);
    while (e > 0) {
      if (bmp::bit_test(e, 0)) result = mod(mul(result, base), m);
      e >>= 1;
      if (e > 0) base = mod(mul(base, base), m);
    }
    return result;
  }
  int degree(const ModPoly& a) const { return static_cast<int>(a.size()) - 1; }
};

/// Distinct-degree factorization of a monic squarefree f mod p: pairs
/// (product of all irreducible factors of degree d, d).
std::vector<std::pair<ModPoly, int>> distinct_degree(const ModRing& ring, ModPoly f) {
  std::vector<std::pair<ModPoly, int>> out;
  const ModPoly x{Integer(0), Integer(1)};
  ModPoly h = x;
  for (int d = 1; 2 * d <= ring.degree(f); ++d) {
    h = ring.powmod(h, ring.p, f);
    ModPoly g = ring.gcd(ring.sub(h, x), f);
    if (ring.degree(g) > 0) {
      out.emplace_back(g, d);
      f = ring.divmod(f, g).first;
      h = ring.mod(h, f);
    }
  }
  if (ring.degree(f) > 0) out.emplace_back(f, ring.degree(f));
  return out;
}

/// Cantor–Zassenhaus splitting of a product of degree-d irreducibles (odd p).
void equal_degree(const ModRing& ring, const ModPoly& g, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (ring.degree(g) == d) {
    out.push_back(g);
    return;
  }
  const Integer exponent = (bmp::pow(ring.p, static_cast<unsigned>(d)) - 1) / 2;
  std::uniform_int_distribution<unsigned long long> digit;
  for (;;) {
    ModPoly a;
    for (int i = 0; i < ring.degree(g); ++i) a.push_back(ring.reduce(Integer(digit(rng)) * Integer(digit(rng))));
    ring.trim(a);
    if (ring.degree(a) < 1) continue;
    ModPoly b = ring.sub(ring.powmod(a, exponent, g), ModPoly{Integer(1)});
    ModPoly u = ring.gcd(b, g);
    if (ring.degree(u) > 0 && ring.degree(u) < ring.degree(g)) {
      equal_degree(ring, u, d, rng, out);
      equal_degree(ring, ring.divmod(g, u).first, d, rng, out);
      return;
    }
  }
}

bool is_prime(const Integer& n) {
  static thread_local std::mt19937 gen(12345);
  return bmp::miller_rabin_test(n, 25, gen);
}

Integer next_prime(Integer n) {
  if (n < 3) return 3;
  if (n % 2 == 0) ++n;
  while (!is_prime(n)) n += 2;
  return n;
}

/// f mod p is squarefree of full degree.
bool good_prime(const ModRing& ring, const IntPolynomial& f) {
  ModPoly a = ring.from(f);
  if (ring.degree(a) != f.degree()) return false;
  ModPoly da = ring.from(f.derivative());
  return ring.degree(ring.gcd(a, da)) == 0;
}

/// Possible degrees of a factor of f, judged by its factorization mod p.
std::set<int> possible_factor_degrees(const ModRing& ring, const IntPolynomial& f) {
  ModPoly a = ring.monic(ring.from(f));
  std::set<int> sums{0};
  for (const auto& [g, d] : distinct_degree(ring, a)) {
    int count = ring.degree(g) / d;
    for (int i = 0; i < count; ++i) {
      std::set<int> next = sums;
      for (int s : sums) next.insert(s + d);
      sums = std::move(next);
    }
  }
  return sums;
}

/// Small-prime degree patterns rule out any proper factor.
bool patterns_prove_irreducible(const IntPolynomial& f) {
  const int n = f.degree();
  std::set<int> allowed;
  for (int k = 1; k < n; ++k) allowed.insert(k);
  int used = 0;
  for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L}) {
    ModRing ring{Integer(p)};
    if (!good_prime(ring, f)) continue;
    std::set<int> degrees = possible_factor_degrees(ring, f);
    std::set<int> kept;
    for (int k : allowed) {
      if (degrees.count(k)) kept.insert(k);
    }
    allowed = std::move(kept);
    if (allowed.empty()) return true;
    if (++used == 2) break;
  }
  return allowed.empty();
}

/// Advances an ascending index subset of {0..n-1}; false after the last one.
bool next_combination(std::vector<std::size_t>& pick, std::size_t n) {
  const std::size_t k = pick.size();
  for (std::size_t i = k; i-- > 0;) {
    if (pick[i] < n - k + i) {
      ++pick[i];
      for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
      return true;
    }
  }
  return false;
}

IntPolynomial symmetric_lift(const ModRing& ring, const ModPoly& a) {
  const Integer half = ring.p / 2;
  std::vector<Integer> c;
  for (const auto& x : a) c.push_back(x > half ? Integer(x - ring.p) : x);
  return IntPolynomial(std::move(c));
}

/// Irreducible factors of a primitive squarefree f with f(0) != 0 and no
/// cyclotomic factors (they are stripped beforehand, but the method does not
/// rely on it).  Big-prime Zassenhaus: factor mod one large prime, then
/// recombine with exact trial division.
std::vector<IntPolynomial> zassenhaus(IntPolynomial f) {
  if (f.degree() <= 1) return {f};
  if (patterns_prove_irreducible(f)) return {f};

  // Any factor g of f has |coefficients of lc(f)/lc(g) · g| <= |lc f| 2^n ||f||_2.
  Integer norm_sq = 0;
  for (const auto& c : f.coefficients()) norm_sq += c * c;
  const Integer bound = abs(f.leading()) * (Integer(1) << f.degree()) * (isqrt(norm_sq) + 1);
  Integer prime = next_prime(2 * bound + 1);
  while (!good_prime(ModRing{prime}, f)) prime = next_prime(prime + 2);
  const ModRing ring{prime};

  std::mt19937_64 rng(0x5a1e3ULL);
  std::vector<ModPoly> local;
  for (const auto& [g, d] : distinct_degree(ring, ring.monic(ring.from(f)))) equal_degree(ring, g, d, rng, local);

  std::vector<IntPolynomial> found;
  std::size_t s = 1;
  while (2 * s <= local.size()) {
    bool progress = false;
    std::vector<std::size_t> pick(s);
    for (std::size_t i = 0; i < s; ++i) pick[i] = i;
    for (;;) {
      ModPoly prod{ring.reduce(f.leading())};
      for (std::size_t i : pick) prod = ring.mul(prod, local[i]);
      IntPolynomial candidate = symmetric_lift(ring, prod).primitive_part();
      if (auto quotient = exact_divide(f, candidate)) {
        found.push_back(candidate);
        f = *quotient;
        for (std::size_t k = pick.size(); k-- > 0;) local.erase(local.begin() + static_cast<long>(pick[k]));
        progress = true;
        break;
      }
      if (!next_combination(pick, local.size())) break;
    }
    if (!progress) ++s;
  }
  found.push_back(f.primitive_part());
  return found;
}

}  // namespace

std::vector<std::pair<IntPolynomial, int>> factor_over_integers(const IntPolynomial& p) {
  if (p.is_zero()) throw PreconditionError("factorization of the zero polynomial");
  std::vector<std::pair<IntPolynomial, int>> out;
  for (auto [part, m] : squarefree_decomposition(p)) {
    if (part.degree() < 1) continue;
    if (part.constant_term() == 0) {
      out.emplace_back(IntPolynomial::monomial(1), m);
      part = *exact_divide(part, IntPolynomial::monomial(1));
    }
    for (unsigned long long n : cyclotomic_indices_up_to_degree(part.degree())) {
      if (part.degree() < 1) break;
      IntPolynomial phi = cyclotomic_polynomial(n);
      if (phi.degree() > part.degree()) continue;
      if (auto q = exact_divide(part, phi)) {
        out.emplace_back(phi, m);
        part = *q;
      }
    }
    if (part.degree() < 1) continue;
    for (auto& f : zassenhaus(part)) {
      if (f.degree() >= 1) out.emplace_back(std::move(f), m);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

bool is_irreducible_over_integers(const IntPolynomial& p) {
  if (!p.is_monic() || p.degree() < 1) throw PreconditionError("irreducibility test needs a monic polynomial of degree >= 1");
  if (p.degree() > kIrreducibilityDegreeBound) {
    throw PreconditionError("irreducibility test is bounded to degree " + std::to_string(kIrreducibilityDegreeBound));
  }
  if (p.degree() == 1) return true;
  if (gcd(p, p.derivative()).degree() > 0) return false;
  if (p.constant_term() == 0) return false;
  if (patterns_prove_irreducible(p)) return true;
  auto factors = factor_over_integers(p);
  return factors.size() == 1 && factors.front().second == 1;
}

}  // namespace salemlat
