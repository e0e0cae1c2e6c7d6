#pragma once

// Exact univariate machinery: real-root counting, irreducibility and
// factorization over Z, cyclotomic recognition, and Salem polynomials.

#include "salemlat/numeric.hpp"
#include "salemlat/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace salemlat {

/// Closed interval [lo, hi] with exact rational endpoints.
struct RationalInterval {
  Rational lo;
  Rational hi;

  RationalInterval() = default;
  RationalInterval(Rational lo_, Rational hi_);
  static RationalInterval point(const Rational& x) { return {x, x}; }

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);
/// x^k for an interval of positive numbers; k may be negative.
RationalInterval pow_positive(const RationalInterval& x, long long k);

/// An endpoint handed to sturm_count is itself a root.
class EndpointIsRootError : public Error {
 public:
  explicit EndpointIsRootError(Rational endpoint);
  const Rational& endpoint() const { return endpoint_; }

 private:
  Rational endpoint_;
};

// ---------------------------------------------------------------------------
// Real roots

bool is_reciprocal(const IntPolynomial& p);

/// Number of distinct real roots of a squarefree p in the open interval.
int sturm_count(const IntPolynomial& p, const RationalInterval& interval);

/// Distinct real roots of a squarefree p in (lo, +inf) / on the whole line.
int count_roots_above(const IntPolynomial& p, const Rational& lo);
int count_real_roots(const IntPolynomial& p);

/// Real roots of any non-zero p in the open interval, counted with
/// multiplicity. Either bound may be omitted for an unbounded side.
int count_roots_with_multiplicity(const IntPolynomial& p, const std::optional<Rational>& lo,
                                  const std::optional<Rational>& hi);

/// Every root of p has absolute value strictly below this bound.
Rational cauchy_root_bound(const IntPolynomial& p);

/// Narrows an interval holding exactly one simple real root of p (sign change
/// at the ends) until it is narrower than `width`.
RationalInterval refine_root(const IntPolynomial& p, RationalInterval interval, const Rational& width);

/// Disjoint isolating intervals (ascending) for the distinct real roots of
/// a squarefree p inside the open interval, each narrower than `width`.
/// A root that is hit exactly is returned as a point interval.
std::vector<RationalInterval> isolate_real_roots(const IntPolynomial& p, const RationalInterval& within,
                                                 const Rational& width);

/// Number of roots (with multiplicity) strictly outside the closed unit
/// disk.  Exact: reciprocal parts are counted through the trace polynomial
/// and Sturm sequences, the remaining part with a Schur–Cohn matrix over Q.
int count_roots_outside_unit_circle(const IntPolynomial& p);

/// Roots of a real polynomial (ascending rational coefficients) inside the
/// open unit disk, from the inertia of its Schur–Cohn matrix; nullopt when
/// the matrix is singular (p shares a root with its reversal).
std::optional<int> schur_cohn_inside_count(const std::vector<Rational>& ascending);

/// Certified enclosure of max |root| of p (p(0) != 0).
RationalInterval spectral_radius_enclosure(const IntPolynomial& p, const Rational& precision);

/// Enclosure of log(x) over an interval of positive rationals, padded outward
/// so the true logarithms of both ends are inside.
RationalInterval log_enclosure(const RationalInterval& x);

// ---------------------------------------------------------------------------
// Factorization

/// Highest degree accepted by is_irreducible_over_integers.
inline constexpr int kIrreducibilityDegreeBound = 24;

bool is_irreducible_over_integers(const IntPolynomial& p);

/// Irreducible factorization of the primitive part of p: pairs (f, m) with
/// positive leading coefficients, sorted by degree then coefficients.
std::vector<std::pair<IntPolynomial, int>> factor_over_integers(const IntPolynomial& p);

// ---------------------------------------------------------------------------
// Cyclotomic polynomials

unsigned long long euler_phi(unsigned long long n);
IntPolynomial cyclotomic_polynomial(unsigned long long n);
/// All n >= 1 with euler_phi(n) <= degree, ascending.
std::vector<unsigned long long> cyclotomic_indices_up_to_degree(int degree);
/// Every root of the monic p is a root of unity (Graeffe iteration with
/// cycle detection).
bool is_cyclotomic_product(const IntPolynomial& p);
/// n with p == cyclotomic_polynomial(n), for monic irreducible p.
std::optional<unsigned long long> cyclotomic_order(const IntPolynomial& p);

/// q with p(x) = x^n q(x + 1/x) for monic reciprocal p of degree 2n.
IntPolynomial trace_polynomial(const IntPolynomial& p);
/// Same transform for any palindromic p of even degree (no monic check).
IntPolynomial trace_polynomial_of_palindrome(const IntPolynomial& p);

// ---------------------------------------------------------------------------
// Salem polynomials

struct SalemCertificate {
  IntPolynomial polynomial;
  int degree = 0;
  Integer trace;
  RationalInterval salem_number;  ///< encloses the unique root > 1
  int unit_circle_root_pairs = 0;
  bool is_quadratic = false;
};

enum class SalemRejection { NotReciprocal, Reducible, RootLayout };

std::string to_string(SalemRejection reason);

struct SalemClassification {
  std::optional<SalemCertificate> certificate;
  std::optional<SalemRejection> rejection;
  std::string detail;

  bool is_salem() const { return certificate.has_value(); }
};

SalemClassification classify_salem(const IntPolynomial& p, const Rational& precision);

/// Enclosure of the Salem number of a known Salem polynomial.
RationalInterval salem_number_enclosure(const IntPolynomial& p, const Rational& precision);
/// Enclosure of the reciprocal root 1/alpha, from the same trace-root bracket.
RationalInterval salem_reciprocal_enclosure(const IntPolynomial& p, const Rational& precision);

inline constexpr int kEnumerationDegreeBound = 12;

/// All Salem polynomials of the given even degree with trace in
/// [trace_min, trace_max], sorted by coefficient tuple.
std::vector<SalemCertificate> enumerate_salem(int degree, const Integer& trace_min, const Integer& trace_max);

/// Comparison could not be decided within the refinement budget.
class UndecidableComparisonError : public Error {
 public:
  using Error::Error;
};

struct PowerProduct {
  long long n = 0;
  long long m = 0;
  RationalInterval value;
};

/// Every (n, m) with n in [n_min, n_max] and alpha^n beta^m certified in the
/// open interval (c1, c2).
std::vector<PowerProduct> bounded_power_products(const SalemCertificate& alpha, const SalemCertificate& beta,
                                                 const Rational& c1, const Rational& c2, long long n_min,
                                                 long long n_max);

}  // namespace salemlat
