#include "salemlat/polyalg.hpp"

#include "salemlat/exact_linalg.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>

namespace salemlat {

RationalInterval::RationalInterval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (hi < lo) throw PreconditionError("interval with lo > hi");
}

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

RationalInterval pow_positive(const RationalInterval& x, long long k) {
  if (x.lo.sign() <= 0) throw PreconditionError("pow_positive needs a positive interval");
  RationalInterval base = x;
  if (k < 0) {
    base = {1 / x.hi, 1 / x.lo};
    k = -k;
  }
  RationalInterval result = RationalInterval::point(1);
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

EndpointIsRootError::EndpointIsRootError(Rational endpoint)
    : Error("interval endpoint " + to_string(endpoint) + " is a root"), endpoint_(std::move(endpoint)) {}

bool is_reciprocal(const IntPolynomial& p) {
  if (p.is_zero()) throw PreconditionError("is_reciprocal of the zero polynomial");
  const auto& c = p.coefficients();
  return std::equal(c.begin(), c.end(), c.rbegin());
}

namespace {

std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p) {
  std::vector<IntPolynomial> seq{p, p.derivative()};
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    const IntPolynomial& a = seq[seq.size() - 2];
    const IntPolynomial& b = seq.back();
    // prem = lc(b)^delta · rem(a, b); the Sturm step wants -rem up to a
    // positive factor.
    IntPolynomial r = pseudo_remainder(a, b);
    int delta = a.degree() - b.degree() + 1;
    bool flip = b.leading().sign() > 0 || delta % 2 == 0;
    if (flip) r = -r;
    if (r.is_zero()) break;
    Integer c = r.content();
    IntPolynomial scaled = r;
    if (c != 1) {
      std::vector<Integer> coeffs = r.coefficients();
      for (auto& x : coeffs) x /= c;
      scaled = IntPolynomial(std::move(coeffs));
    }
    seq.push_back(std::move(scaled));
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int variations(const std::vector<int>& signs) {
  int count = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int variations_at(const std::vector<IntPolynomial>& seq, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto& s : seq) signs.push_back(s.sign_at(x));
  return variations(signs);
}

int variations_at_infinity(const std::vector<IntPolynomial>& seq, bool positive) {
  std::vector<int> signs;
  for (const auto& s : seq) {
    int sg = s.leading().sign();
    if (!positive && s.degree() % 2 == 1) sg = -sg;
    signs.push_back(sg);
  }
  return variations(signs);
}

int sturm_between(const IntPolynomial& p, const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  if (p.is_zero()) throw PreconditionError("Sturm count of the zero polynomial");
  if (p.degree() == 0) return 0;
  if (lo && p.sign_at(*lo) == 0) throw EndpointIsRootError(*lo);
  if (hi && p.sign_at(*hi) == 0) throw EndpointIsRootError(*hi);
  if (lo && hi && *hi <= *lo) return 0;
  auto seq = sturm_sequence(p);
  if (seq.back().degree() > 0) throw PreconditionError("Sturm count needs a squarefree polynomial");
  int v_lo = lo ? variations_at(seq, *lo) : variations_at_infinity(seq, false);
  int v_hi = hi ? variations_at(seq, *hi) : variations_at_infinity(seq, true);
  return v_lo - v_hi;
}

std::vector<Rational> to_rational_coefficients(const IntPolynomial& p) {
  std::vector<Rational> out;
  for (const auto& c : p.coefficients()) out.emplace_back(c);
  return out;
}

}  // namespace

int sturm_count(const IntPolynomial& p, const RationalInterval& interval) {
  return sturm_between(p, interval.lo, interval.hi);
}

int count_roots_above(const IntPolynomial& p, const Rational& lo) { return sturm_between(p, lo, std::nullopt); }

int count_real_roots(const IntPolynomial& p) { return sturm_between(p, std::nullopt, std::nullopt); }

int count_roots_with_multiplicity(const IntPolynomial& p, const std::optional<Rational>& lo,
                                  const std::optional<Rational>& hi) {
  int total = 0;
  for (const auto& [f, m] : squarefree_decomposition(p)) total += m * sturm_between(f, lo, hi);
  return total;
}

Rational cauchy_root_bound(const IntPolynomial& p) {
  if (p.degree() < 1) throw PreconditionError("root bound of a constant polynomial");
  Rational worst = 0;
  const Integer lc = abs(p.leading());
  for (int k = 0; k < p.degree(); ++k) worst = std::max(worst, Rational(abs(p.coefficient(k)), lc));
  return 1 + worst;
}

RationalInterval refine_root(const IntPolynomial& p, RationalInterval interval, const Rational& width) {
  if (interval.width() == 0) return interval;
  int s_lo = p.sign_at(interval.lo);
  int s_hi = p.sign_at(interval.hi);
  if (s_lo == 0) return RationalInterval::point(interval.lo);
  if (s_hi == 0) return RationalInterval::point(interval.hi);
  if (s_lo == s_hi) throw PreconditionError("refine_root needs a sign change");
  while (interval.width() >= width) {
    Rational mid = interval.midpoint();
    int s = p.sign_at(mid);
    if (s == 0) return RationalInterval::point(mid);
    if (s == s_lo) {
      interval.lo = mid;
    } else {
      interval.hi = mid;
    }
  }
  return interval;
}

std::vector<RationalInterval> isolate_real_roots(const IntPolynomial& p, const RationalInterval& within,
                                                 const Rational& width) {
  std::vector<RationalInterval> out;
  if (p.degree() < 1) return out;
  auto seq = sturm_sequence(p);
  if (seq.back().degree() > 0) throw PreconditionError("root isolation needs a squarefree polynomial");
  auto count = [&](const Rational& a, const Rational& b) { return variations_at(seq, a) - variations_at(seq, b); };

  // Work on half-open pieces (a, b]; a root exactly at b is returned as a point.
  std::vector<RationalInterval> stack{within};
  if (p.sign_at(within.lo) == 0) throw EndpointIsRootError(within.lo);
  if (p.sign_at(within.hi) == 0) throw EndpointIsRootError(within.hi);
  while (!stack.empty()) {
    RationalInterval piece = stack.back();
    stack.pop_back();
    int n = count(piece.lo, piece.hi);
    if (n == 0) continue;
    if (n == 1) {
      out.push_back(refine_root(p, piece, width));
      continue;
    }
    Rational mid = piece.midpoint();
    if (p.sign_at(mid) == 0) {
      out.push_back(RationalInterval::point(mid));
      // Nudge the split point off the root to keep the halves clean.
      Rational step = piece.width() / 4;
      Rational left_end = mid - step, right_start = mid + step;
      while (p.sign_at(left_end) == 0 || p.sign_at(right_start) == 0 || count(left_end, right_start) != 1) {
        step /= 2;
        left_end = mid - step;
        right_start = mid + step;
      }
      stack.push_back({piece.lo, left_end});
      stack.push_back({right_start, piece.hi});
    } else {
      stack.push_back({piece.lo, mid});
      stack.push_back({mid, piece.hi});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  return out;
}

std::optional<int> schur_cohn_inside_count(const std::vector<Rational>& ascending) {
  std::vector<Rational> a = ascending;
  while (!a.empty() && a.back() == 0) a.pop_back();
  if (a.empty()) throw PreconditionError("Schur-Cohn matrix of the zero polynomial");
  const Index n = static_cast<Index>(a.size()) - 1;
  if (n == 0) return 0;
  // C = A^T A - B^T B with A, B the lower-triangular Toeplitz matrices of
  // (a_0 .. a_{n-1}) and (a_n .. a_1).  C is nonsingular iff p and its
  // reversal are coprime, and then its negative inertia counts the roots
  // inside the unit disk.
  RatMatrix lower_a = RatMatrix::Zero(n, n), lower_b = RatMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j <= i; ++j) {
      lower_a(i, j) = a[static_cast<std::size_t>(i - j)];
      lower_b(i, j) = a[static_cast<std::size_t>(n - (i - j))];
    }
  }
  RatMatrix c = lower_a.transpose() * lower_a - lower_b.transpose() * lower_b;
  Inertia in = inertia(c);
  if (in.zero != 0) return std::nullopt;
  return static_cast<int>(in.negative);
}

namespace {

/// Roots outside the closed unit disk of a palindromic polynomial of even
/// degree with no roots at +1 or -1.
int outside_for_palindrome(const IntPolynomial& g) {
  if (g.degree() <= 0) return 0;
  IntPolynomial q = trace_polynomial_of_palindrome(g);
  int outside = 0;
  // A real trace root y with |y| > 2 gives one root of g outside the circle;
  // a non-real or |y| < 2 root gives a conjugate pair on the circle or off
  // it in a pair (rho, 1/rho) with exactly one outside.
  for (const auto& [f, m] : squarefree_decomposition(q)) {
    int on_circle = sturm_count(f, {Rational(-2), Rational(2)});
    outside += m * (f.degree() - on_circle);
  }
  return outside;
}

}  // namespace

int count_roots_outside_unit_circle(const IntPolynomial& p) {
  if (p.is_zero()) throw PreconditionError("root count of the zero polynomial");
  // Strip roots at 0, +1, -1.
  std::vector<Integer> coeffs = p.primitive_part().coefficients();
  std::size_t zeros = 0;
  while (zeros < coeffs.size() && coeffs[zeros] == 0) ++zeros;
  IntPolynomial r(std::vector<Integer>(coeffs.begin() + static_cast<long>(zeros), coeffs.end()));
  for (const IntPolynomial& linear : {IntPolynomial{-1, 1}, IntPolynomial{1, 1}}) {
    while (r.degree() > 0) {
      auto q = exact_divide(r, linear);
      if (!q) break;
      r = *q;
    }
  }
  if (r.degree() <= 0) return 0;
  IntPolynomial g = gcd(r, r.reversed());
  IntPolynomial h = *exact_divide(r, g);
  int outside = outside_for_palindrome(g);
  if (h.degree() > 0) {
    auto inside = schur_cohn_inside_count(to_rational_coefficients(h));
    if (!inside) throw Error("Schur-Cohn matrix is singular for " + h.to_string());
    outside += h.degree() - *inside;
  }
  return outside;
}

namespace {

/// Roots of p with |z| > radius, or nullopt when the table is singular.
std::optional<int> outside_radius(const IntPolynomial& p, const Rational& radius) {
  std::vector<Rational> scaled;
  Rational power = 1;
  for (const auto& c : p.coefficients()) {
    scaled.push_back(Rational(c) * power);
    power *= radius;
  }
  auto inside = schur_cohn_inside_count(scaled);
  if (!inside) return std::nullopt;
  return p.degree() - *inside;
}

}  // namespace

RationalInterval spectral_radius_enclosure(const IntPolynomial& p, const Rational& precision) {
  if (precision.sign() <= 0) throw PreconditionError("precision must be positive");
  if (p.degree() < 1) throw PreconditionError("spectral radius of a constant polynomial");
  if (p.constant_term() == 0) throw PreconditionError("spectral radius needs p(0) != 0");
  if (count_roots_outside_unit_circle(p) == 0) {
    // Every root has modulus <= 1; with |p(0)| >= |lc| the product of moduli
    // is >= 1 so all lie on the circle.  Otherwise bisect below one.
    if (abs(p.constant_term()) >= abs(p.leading())) return RationalInterval::point(1);
  }
  Rational lo = 0, hi = cauchy_root_bound(p);
  if (count_roots_outside_unit_circle(p) > 0) lo = 1;
  // Invariant: some root has modulus > lo (or >= lo when lo == 0), none > hi.
  while (hi - lo >= precision) {
    Rational mid = (lo + hi) / 2;
    std::optional<int> outside = outside_radius(p, mid);
    Rational nudge = (hi - lo) / 1024;
    while (!outside) {
      mid += nudge;
      nudge /= 2;
      outside = outside_radius(p, mid);
    }
    if (*outside > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

RationalInterval log_enclosure(const RationalInterval& x) {
  if (x.lo.sign() <= 0) throw PreconditionError("log of a non-positive interval");
  using Float = bmp::cpp_bin_float_100;
  auto to_float = [](const Rational& r) { return Float(numerator(r)) / Float(denominator(r)); };
  // Float log is accurate to ~1e-95; pad far beyond that.
  const Float pad("1e-80");
  Float lo = bmp::log(to_float(x.lo)) - pad;
  Float hi = bmp::log(to_float(x.hi)) + pad;
  auto to_rational_down = [](const Float& v, bool up) {
    // v = m · 2^e exactly for a binary float; scale by 2^300 and round.
    Float scaled = bmp::ldexp(v, 300);
    Float f = up ? bmp::ceil(scaled) : bmp::floor(scaled);
    std::string digits = f.str(0, std::ios_base::fixed);
    Integer n = parse_integer(digits.substr(0, digits.find('.')));
    return Rational(n, Integer(1) << 300);
  };
  return {to_rational_down(lo, false), to_rational_down(hi, true)};
}

}  // namespace salemlat
