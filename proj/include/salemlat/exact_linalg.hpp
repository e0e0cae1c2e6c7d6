#pragma once

// Exact dense linear algebra on Eigen matrices with Integer or Rational
// scalars.  Integer inputs go through fraction-free (Bareiss) elimination;
// field routines expect Rational.

#include "salemlat/numeric.hpp"

#include <optional>
#include <utility>

namespace salemlat {

/// Determinant by Bareiss fraction-free elimination. Every intermediate
/// division is exact, so the routine is valid for Integer and Rational alike.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& input) {
  using S = typename Derived::Scalar;
  if (input.rows() != input.cols()) throw PreconditionError("determinant of a non-square matrix");
  const Index n = input.rows();
  if (n == 0) return S(1);
  Matrix<S> m = input;
  S previous = 1;
  int sign_flip = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Index swap = -1;
      for (Index i = k + 1; i < n; ++i) {
        if (m(i, k) != 0) {
          swap = i;
          break;
        }
      }
      if (swap < 0) return S(0);
      m.row(k).swap(m.row(swap));
      sign_flip = -sign_flip;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  return sign_flip > 0 ? m(n - 1, n - 1) : S(-m(n - 1, n - 1));
}

/// Rank over the rationals (fraction-free row reduction).
template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& input) {
  using S = typename Derived::Scalar;
  Matrix<S> m = input;
  Index r = 0;
  S previous = 1;
  for (Index col = 0; col < m.cols() && r < m.rows(); ++col) {
    Index pivot = -1;
    for (Index i = r; i < m.rows(); ++i) {
      if (m(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    m.row(r).swap(m.row(pivot));
    for (Index i = r + 1; i < m.rows(); ++i) {
      for (Index j = col + 1; j < m.cols(); ++j) {
        m(i, j) = (m(i, j) * m(r, col) - m(i, col) * m(r, j)) / previous;
      }
      m(i, col) = 0;
    }
    previous = m(r, col);
    ++r;
  }
  return r;
}

/// Some solution x of a·x = b over the rationals, or nullopt when the system
/// is inconsistent.  Free variables are set to zero.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

/// Exact inverse; throws PreconditionError when singular.
RatMatrix inverse(const RatMatrix& a);

/// Integer matrix power for exponent >= 0 (square-and-multiply).
IntMatrix matrix_power(const IntMatrix& m, unsigned long long exponent);

/// Characteristic polynomial coefficients of a square integer matrix,
/// ascending, via the division-free Berkowitz recurrence.
std::vector<Integer> characteristic_coefficients(const IntMatrix& m);

/// Counts of positive, zero and negative eigenvalues of a symmetric matrix.
struct Inertia {
  Index positive = 0;
  Index zero = 0;
  Index negative = 0;
};

/// Inertia by symmetric Gaussian congruence over Q (Sylvester's law).
Inertia inertia(const RatMatrix& symmetric);

}  // namespace salemlat
