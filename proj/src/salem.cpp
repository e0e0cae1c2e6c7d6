#include "salemlat/polyalg.hpp"

#include <algorithm>
#include <cmath>

namespace salemlat {

std::string to_string(SalemRejection reason) {
  switch (reason) {
    case SalemRejection::NotReciprocal:
      return "not_reciprocal";
    case SalemRejection::Reducible:
      return "reducible";
    case SalemRejection::RootLayout:
      return "root_layout";
  }
  return "unknown";
}

namespace {

unsigned bits_for(const Rational& precision) {
  // 2^-bits <= precision / 8
  Integer q = ceil(Rational(8) / precision);
  return static_cast<unsigned>(bmp::msb(q)) + 2;
}

/// Bracket of the unique trace root above 2 of a Salem trace polynomial.
RationalInterval initial_trace_bracket(const IntPolynomial& q) {
  Rational hi = std::max(cauchy_root_bound(q), Rational(3));
  return {Rational(2), hi};
}

struct PairEnclosure {
  RationalInterval alpha;
  RationalInterval inverse;
};

PairEnclosure enclose_pair(const IntPolynomial& p, const Rational& precision) {
  if (precision.sign() <= 0) throw PreconditionError("precision must be positive");
  const IntPolynomial q = trace_polynomial(p);
  RationalInterval y = initial_trace_bracket(q);
  const unsigned bits = bits_for(precision);
  Rational y_width = precision;
  for (;;) {
    y = refine_root(q, y, y_width);
    auto lo_root = sqrt_bounds(y.lo * y.lo - 4, bits);
    auto hi_root = sqrt_bounds(y.hi * y.hi - 4, bits);
    RationalInterval alpha{(y.lo + lo_root.first) / 2, (y.hi + hi_root.second) / 2};
    RationalInterval inverse{(y.hi - hi_root.second) / 2, (y.lo - lo_root.first) / 2};
    if (alpha.lo > 1 && alpha.width() < precision && inverse.lo.sign() > 0 && inverse.width() < precision) {
      return {alpha, inverse};
    }
    y_width /= 16;
  }
}

Integer binomial(int n, int k) {
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Naive interval Horner evaluation of h over [x.lo, x.hi].
RationalInterval evaluate_on(const IntPolynomial& h, const RationalInterval& x) {
  RationalInterval acc = RationalInterval::point(0);
  for (int k = h.degree(); k >= 0; --k) {
    acc = acc * x;
    acc.lo += Rational(h.coefficient(k));
    acc.hi += Rational(h.coefficient(k));
  }
  return acc;
}

/// Search over trace polynomials q(y) = y^n + b_{n-1} y^{n-1} + ... + b_0.
/// All roots of q lie in (-2, Y), so every derivative q^{(k)} has all its
/// roots there too (Rolle), simple, and alternating signs at the roots of
/// q^{(k+1)}.  Fixing b_k by descending k turns that into an interval of
/// admissible b_k at each level.
class SalemSearch {
 public:
  SalemSearch(int n, Integer trace_min, Integer trace_max)
      : n_(n), trace_min_(std::move(trace_min)), trace_max_(std::move(trace_max)), b_(n + 1, Integer(0)) {
    b_[n] = 1;
    // y_1 = trace - (y_2 + ... + y_n) <= trace_max + 2(n - 1); one more keeps
    // the bound strict even when n = 1.
    upper_ = Rational(trace_max_ + 2 * (n - 1) + 1);
    radius_ = std::max(Rational(2), upper_);
    root_width_ = Rational(1, Integer(1) << 24);
  }

  std::vector<SalemCertificate> run() {
    if (upper_ <= 2) return {};
    descend(n_ - 1, {});
    std::sort(found_.begin(), found_.end(),
              [](const SalemCertificate& a, const SalemCertificate& b) { return a.polynomial < b.polynomial; });
    return found_;
  }

 private:
  /// Coefficients of q^{(k)} restricted to the already fixed b_j, j > k.
  IntPolynomial tail(int k) const {
    std::vector<Integer> c(n_ - k + 1, Integer(0));
    for (int j = k + 1; j <= n_; ++j) c[j - k] = b_[j] * factorial(j) / factorial(j - k);
    return IntPolynomial(std::move(c));
  }

  void descend(int k, const std::vector<RationalInterval>& critical) {
    const int d = n_ - k;
    const IntPolynomial h = tail(k);
    const Integer kf = factorial(k);

    // Points -2 < r_1 < ... < r_{d-1} < Y where the signs of q^{(k)}
    // must alternate, ending positive at Y.
    std::vector<RationalInterval> points{RationalInterval::point(-2)};
    points.insert(points.end(), critical.begin(), critical.end());
    points.push_back(RationalInterval::point(upper_));

    std::optional<Rational> c_lo, c_hi;  // exclusive bounds on k! b_k
    for (int i = 0; i <= d; ++i) {
      RationalInterval hv = evaluate_on(h, points[i]);
      if ((d - i) % 2 == 0) {
        Rational bound = -hv.hi;
        if (!c_lo || bound > *c_lo) c_lo = bound;
      } else {
        Rational bound = -hv.lo;
        if (!c_hi || bound < *c_hi) c_hi = bound;
      }
    }
    Integer lo = floor(*c_lo / Rational(kf)) + 1;
    Integer hi = ceil(*c_hi / Rational(kf)) - 1;
    const Integer r = ceil(radius_);
    const Integer box = binomial(n_, k) * bmp::pow(r, static_cast<unsigned>(d));
    lo = std::max(lo, Integer(-box));
    hi = std::min(hi, box);
    if (k == n_ - 1) {
      lo = std::max(lo, Integer(-trace_max_));
      hi = std::min(hi, Integer(-trace_min_));
    }
    for (Integer bk = lo; bk <= hi; ++bk) {
      b_[k] = bk;
      IntPolynomial dk = h + IntPolynomial::constant(bk * kf);
      if (!admissible(dk, k)) continue;
      if (k == 0) {
        record();
      } else {
        descend(k - 1, isolate_real_roots(dk, {Rational(-2), upper_}, root_width_));
      }
    }
    b_[k] = 0;
  }

  bool admissible(const IntPolynomial& dk, int k) const {
    const int d = dk.degree();
    if (dk.sign_at(Rational(-2)) == 0 || dk.sign_at(upper_) == 0) return false;
    if (d >= 2 && gcd(dk, dk.derivative()).degree() > 0) return false;
    if (sturm_count(dk, {Rational(-2), upper_}) != d) return false;
    if (dk.sign_at(Rational(2)) == 0) return k > 0;
    int above_two = sturm_count(dk, {Rational(2), upper_});
    if (k == 0) return above_two == 1;
    return above_two <= 1;
  }

  void record() {
    // p(x) = sum_k b_k x^{n-k} (x^2 + 1)^k
    IntPolynomial p;
    const IntPolynomial x_sq_plus_one{1, 0, 1};
    for (int k = 0; k <= n_; ++k) {
      if (b_[k] == 0) continue;
      p += IntPolynomial::monomial(n_ - k, b_[k]) * power(x_sq_plus_one, k);
    }
    SalemClassification c = classify_salem(p, Rational(1, 1000000));
    if (!c.is_salem()) return;
    if (c.certificate->trace < trace_min_ || c.certificate->trace > trace_max_) return;
    found_.push_back(*c.certificate);
  }

  int n_;
  Integer trace_min_, trace_max_;
  std::vector<Integer> b_;
  Rational upper_, radius_, root_width_;
  std::vector<SalemCertificate> found_;
};

}  // namespace

SalemClassification classify_salem(const IntPolynomial& p, const Rational& precision) {
  if (!p.is_monic() || p.degree() < 2) throw PreconditionError("classify_salem needs a monic polynomial of degree >= 2");
  if (precision.sign() <= 0) throw PreconditionError("precision must be positive");
  SalemClassification out;
  auto reject = [&](SalemRejection reason, std::string detail) {
    out.rejection = reason;
    out.detail = std::move(detail);
    return out;
  };
  if (!is_reciprocal(p)) return reject(SalemRejection::NotReciprocal, "coefficients are not palindromic");
  if (!is_irreducible_over_integers(p)) return reject(SalemRejection::Reducible, "has a proper integer factor");
  if (p.degree() % 2 != 0) return reject(SalemRejection::RootLayout, "odd degree");
  const IntPolynomial q = trace_polynomial(p);
  const int n = q.degree();
  if (q.sign_at(Rational(2)) == 0 || q.sign_at(Rational(-2)) == 0) {
    return reject(SalemRejection::RootLayout, "root at +1 or -1");
  }
  const int above = count_roots_above(q, Rational(2));
  const int middle = sturm_count(q, {Rational(-2), Rational(2)});
  if (above != 1 || middle != n - 1) {
    return reject(SalemRejection::RootLayout, "trace polynomial has " + std::to_string(above) + " roots above 2 and " +
                                                  std::to_string(middle) + " in (-2, 2), degree " +
                                                  std::to_string(n));
  }
  SalemCertificate cert;
  cert.polynomial = p;
  cert.degree = p.degree();
  cert.trace = -p.coefficient(p.degree() - 1);
  cert.salem_number = enclose_pair(p, precision).alpha;
  cert.unit_circle_root_pairs = (p.degree() - 2) / 2;
  cert.is_quadratic = p.degree() == 2;
  out.certificate = std::move(cert);
  return out;
}

RationalInterval salem_number_enclosure(const IntPolynomial& p, const Rational& precision) {
  return enclose_pair(p, precision).alpha;
}

RationalInterval salem_reciprocal_enclosure(const IntPolynomial& p, const Rational& precision) {
  return enclose_pair(p, precision).inverse;
}

std::vector<SalemCertificate> enumerate_salem(int degree, const Integer& trace_min, const Integer& trace_max) {
  if (degree % 2 != 0) {
    throw PreconditionError("Salem polynomials have even degree; got " + std::to_string(degree));
  }
  if (degree < 2 || degree > kEnumerationDegreeBound) {
    throw PreconditionError("enumeration degree must lie in [2, " + std::to_string(kEnumerationDegreeBound) + "]");
  }
  if (trace_min > trace_max) throw PreconditionError("trace_min exceeds trace_max");
  return SalemSearch(degree / 2, trace_min, trace_max).run();
}

std::vector<PowerProduct> bounded_power_products(const SalemCertificate& alpha, const SalemCertificate& beta,
                                                 const Rational& c1, const Rational& c2, long long n_min,
                                                 long long n_max) {
  if (!(c1 > 1 && c1 < c2)) throw PreconditionError("bounded_power_products needs 1 < c1 < c2");
  if (n_min > n_max) throw PreconditionError("empty n range");
  constexpr int kBudget = 12;

  // Enclosures at successively finer precision, computed on demand.
  std::vector<std::pair<RationalInterval, RationalInterval>> levels;
  auto level = [&](int i) -> const std::pair<RationalInterval, RationalInterval>& {
    while (static_cast<int>(levels.size()) <= i) {
      Rational precision = Rational(1, Integer(1) << (20 + 16 * levels.size()));
      levels.emplace_back(salem_number_enclosure(alpha.polynomial, precision),
                          salem_number_enclosure(beta.polynomial, precision));
    }
    return levels[i];
  };

  const double log_a = std::log(to_double(alpha.salem_number.midpoint()));
  const double log_b = std::log(to_double(beta.salem_number.midpoint()));
  const double log_c1 = std::log(to_double(c1)), log_c2 = std::log(to_double(c2));

  std::vector<PowerProduct> out;
  for (long long n = n_min; n <= n_max; ++n) {
    const double m_lo = (log_c1 - static_cast<double>(n) * log_a) / log_b;
    const double m_hi = (log_c2 - static_cast<double>(n) * log_a) / log_b;
    for (long long m = static_cast<long long>(std::floor(m_lo)) - 2; m <= static_cast<long long>(std::ceil(m_hi)) + 2;
         ++m) {
      for (int i = 0;; ++i) {
        if (i == kBudget) {
          throw UndecidableComparisonError("cannot separate alpha^" + std::to_string(n) + " beta^" +
                                           std::to_string(m) + " from the bounds");
        }
        const auto& [a, b] = level(i);
        RationalInterval v = pow_positive(a, n) * pow_positive(b, m);
        if (v.lo > c1 && v.hi < c2) {
          out.push_back({n, m, v});
          break;
        }
        if (v.hi <= c1 || v.lo >= c2) break;
      }
    }
  }
  return out;
}

}  // namespace salemlat
