#pragma once

// Scalar and dense-matrix vocabulary shared by every module.
//
// All arithmetic is exact: Integer and Rational are GMP-backed
// boost::multiprecision numbers with expression templates disabled so they
// compose cleanly inside Eigen expressions.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace salemlat {

namespace bmp = boost::multiprecision;

using Integer = bmp::number<bmp::gmp_int, bmp::et_off>;
using Rational = bmp::number<bmp::gmp_rational, bmp::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

using Index = Eigen::Index;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold for its input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

inline Integer numerator(const Rational& r) { return bmp::numerator(r); }
inline Integer denominator(const Rational& r) { return bmp::denominator(r); }

inline int sign(const Integer& x) { return x.sign(); }
inline int sign(const Rational& x) { return x.sign(); }

/// Largest integer <= r.
inline Integer floor(const Rational& r) {
  Integer n = numerator(r), d = denominator(r);
  Integer q = n / d;  // truncates toward zero
  if (n.sign() < 0 && q * d != n) q -= 1;
  return q;
}

/// Smallest integer >= r.
inline Integer ceil(const Rational& r) { return -floor(-r); }

inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

/// floor(sqrt(n)) for n >= 0.
inline Integer isqrt(const Integer& n) {
  if (n.sign() < 0) throw PreconditionError("isqrt of a negative integer");
  return bmp::sqrt(n);
}

/// Rational lower and upper bounds for sqrt(r), r >= 0, with the gap at most
/// 2^-bits.
std::pair<Rational, Rational> sqrt_bounds(const Rational& r, unsigned bits);

/// Parses a decimal integer literal with optional sign; rejects anything else.
Integer parse_integer(const std::string& text);

/// Parses "a", "-a", "a/b" or a plain decimal such as "1e-12" / "0.001".
Rational parse_rational(const std::string& text);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

/// Approximate conversion for reporting and for heuristics that are always
/// followed by an exact check.
double to_double(const Rational& x);

template <typename Derived>
Matrix<Rational> to_rational(const Eigen::MatrixBase<Derived>& m) {
  return m.template cast<Rational>();
}

/// Exact conversion back to integers; throws if an entry is fractional.
IntMatrix to_integer(const RatMatrix& m);

/// True when every entry has denominator one.
bool is_integral(const RatMatrix& m);

inline IntMatrix identity(Index n) { return IntMatrix::Identity(n, n); }

/// Gram form of a coordinate pair: x^T G y.
template <typename DX, typename DG, typename DY>
typename DG::Scalar bilinear(const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DG>& g,
                             const Eigen::MatrixBase<DY>& y) {
  using S = typename DG::Scalar;
  S acc = 0;
  for (Index i = 0; i < g.rows(); ++i) {
    if (x(i) == 0) continue;
    S row = 0;
    for (Index j = 0; j < g.cols(); ++j) {
      if (y(j) != 0) row += g(i, j) * y(j);
    }
    acc += x(i) * row;
  }
  return acc;
}

/// Integer matrix from nested initializer rows; handy in tests and fixtures.
IntMatrix int_matrix(const std::vector<std::vector<long long>>& rows);
IntVector int_vector(const std::vector<long long>& entries);

}  // namespace salemlat
