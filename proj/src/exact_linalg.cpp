#include "salemlat/exact_linalg.hpp"

namespace salemlat {

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  if (a.rows() != b.size()) throw PreconditionError("solve: dimension mismatch");
  const Index rows = a.rows(), cols = a.cols();
  RatMatrix m(rows, cols + 1);
  m.leftCols(cols) = a;
  m.col(cols) = b;

  std::vector<Index> pivot_cols;
  Index r = 0;
  for (Index col = 0; col < cols && r < rows; ++col) {
    Index pivot = -1;
    for (Index i = r; i < rows; ++i) {
      if (m(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    m.row(r).swap(m.row(pivot));
    const Rational inv = Rational(1) / m(r, col);
    m.row(r) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || m(i, col) == 0) continue;
      const Rational factor = m(i, col);
      m.row(i) -= factor * m.row(r);
    }
    pivot_cols.push_back(col);
    ++r;
  }
  for (Index i = r; i < rows; ++i) {
    if (m(i, cols) != 0) return std::nullopt;
  }
  RatVector x = RatVector::Zero(cols);
  for (Index i = 0; i < r; ++i) x(pivot_cols[static_cast<size_t>(i)]) = m(i, cols);
  return x;
}

RatMatrix inverse(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw PreconditionError("inverse of a non-square matrix");
  const Index n = a.rows();
  RatMatrix m(n, 2 * n);
  m.leftCols(n) = a;
  m.rightCols(n) = RatMatrix::Identity(n, n);
  for (Index col = 0; col < n; ++col) {
    Index pivot = -1;
    for (Index i = col; i < n; ++i) {
      if (m(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) throw PreconditionError("inverse of a singular matrix");
    m.row(col).swap(m.row(pivot));
    const Rational inv = Rational(1) / m(col, col);
    m.row(col) *= inv;
    for (Index i = 0; i < n; ++i) {
      if (i == col || m(i, col) == 0) continue;
      const Rational factor = m(i, col);
      m.row(i) -= factor * m.row(col);
    }
  }
  return m.rightCols(n);
}

IntMatrix matrix_power(const IntMatrix& m, unsigned long long exponent) {
  if (m.rows() != m.cols()) throw PreconditionError("power of a non-square matrix");
  IntMatrix result = IntMatrix::Identity(m.rows(), m.cols());
  IntMatrix base = m;
  while (exponent > 0) {
    if (exponent & 1ULL) result = (result * base).eval();
    exponent >>= 1;
    if (exponent > 0) base = (base * base).eval();
  }
  return result;
}

std::vector<Integer> characteristic_coefficients(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw PreconditionError("characteristic polynomial of a non-square matrix");
  const Index n = a.rows();
  if (n == 0) return {Integer(1)};

  // Berkowitz: descending coefficients of det(xI - A_r) for growing leading
  // principal blocks A_r, each step a Toeplitz matrix-vector product.
  std::vector<Integer> poly = {Integer(1), Integer(-a(0, 0))};
  for (Index r = 1; r < n; ++r) {
    const IntMatrix sub = a.topLeftCorner(r, r);
    const IntVector column = a.block(0, r, r, 1);
    const IntVector row = a.block(r, 0, 1, r).transpose();

    std::vector<Integer> toeplitz(static_cast<size_t>(r + 2));
    toeplitz[0] = 1;
    toeplitz[1] = -a(r, r);
    IntVector power_times_column = column;
    for (Index k = 0; k < r; ++k) {
      toeplitz[static_cast<size_t>(k + 2)] = -row.dot(power_times_column);
      if (k + 1 < r) power_times_column = (sub * power_times_column).eval();
    }

    std::vector<Integer> next(static_cast<size_t>(r + 2), Integer(0));
    for (size_t i = 0; i < next.size(); ++i) {
      for (size_t j = 0; j < poly.size() && j <= i; ++j) next[i] += toeplitz[i - j] * poly[j];
    }
    poly = std::move(next);
  }
  return {poly.rbegin(), poly.rend()};
}

}  // namespace salemlat

namespace salemlat {

Inertia inertia(const RatMatrix& symmetric) {
  if (symmetric.rows() != symmetric.cols()) throw PreconditionError("inertia of a non-square matrix");
  if (symmetric != symmetric.transpose()) throw PreconditionError("inertia of a non-symmetric matrix");
  RatMatrix a = symmetric;
  const Index n = a.rows();
  Inertia out;
  Index k = 0;
  while (k < n) {
    Index pivot = -1;
    for (Index i = k; i < n; ++i) {
      if (a(i, i) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) {
      // Zero diagonal: fold a partner row/column in to create 2 a_ij there.
      Index pi = -1, pj = -1;
      for (Index i = k; i < n && pi < 0; ++i) {
        for (Index j = i + 1; j < n; ++j) {
          if (a(i, j) != 0) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi < 0) {
        out.zero += n - k;
        break;
      }
      a.row(pi) += a.row(pj);
      a.col(pi) += a.col(pj);
      pivot = pi;
    }
    if (pivot != k) {
      a.row(pivot).swap(a.row(k));
      a.col(pivot).swap(a.col(k));
    }
    const Rational d = a(k, k);
    (d.sign() > 0 ? out.positive : out.negative) += 1;
    for (Index i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / d;
      for (Index j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
    for (Index i = k + 1; i < n; ++i) {
      a(i, k) = 0;
      a(k, i) = 0;
    }
    ++k;
  }
  return out;
}

}  // namespace salemlat
