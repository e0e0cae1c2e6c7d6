#include "salemlat/smith.hpp"

#include "salemlat/exact_linalg.hpp"

namespace salemlat {

namespace {

Integer abs_value(const Integer& x) { return x.sign() < 0 ? Integer(-x) : x; }

// Quotient rounding toward zero keeps |remainder| < |divisor|, which is all
// the Euclidean steps below need.
Integer trunc_quotient(const Integer& a, const Integer& b) { return a / b; }

// Position of the smallest non-zero |entry| in d[t:, t:], or (-1, -1).
std::pair<Index, Index> smallest_entry(const IntMatrix& d, Index t) {
  std::pair<Index, Index> best{-1, -1};
  Integer best_value;
  for (Index i = t; i < d.rows(); ++i) {
    for (Index j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Integer value = abs_value(d(i, j));
      if (best.first < 0 || value < best_value) {
        best = {i, j};
        best_value = value;
        if (best_value == 1) return best;
      }
    }
  }
  return best;
}

}  // namespace

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> out;
  for (Index i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm f;
  f.d = m;
  f.u = IntMatrix::Identity(m.rows(), m.rows());
  f.v = IntMatrix::Identity(m.cols(), m.cols());
  IntMatrix& d = f.d;

  auto swap_rows = [&](Index a, Index b) {
    if (a == b) return;
    d.row(a).swap(d.row(b));
    f.u.row(a).swap(f.u.row(b));
  };
  auto swap_cols = [&](Index a, Index b) {
    if (a == b) return;
    d.col(a).swap(d.col(b));
    f.v.col(a).swap(f.v.col(b));
  };

  const Index limit = std::min(m.rows(), m.cols());
  Index t = 0;
  for (; t < limit; ++t) {
    auto [pi, pj] = smallest_entry(d, t);
    if (pi < 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (Index i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        const Integer q = trunc_quotient(d(i, t), d(t, t));
        d.row(i) -= q * d.row(t);
        f.u.row(i) -= q * f.u.row(t);
        if (d(i, t) != 0) clean = false;
      }
      for (Index j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        const Integer q = trunc_quotient(d(t, j), d(t, t));
        d.col(j) -= q * d.col(t);
        f.v.col(j) -= q * f.v.col(t);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder survived: move the smallest leftover in row/column t
        // onto the pivot and repeat.
        Index best_i = t, best_j = t;
        Integer best = abs_value(d(t, t));
        for (Index i = t + 1; i < d.rows(); ++i) {
          if (d(i, t) != 0 && abs_value(d(i, t)) < best) {
            best = abs_value(d(i, t));
            best_i = i;
            best_j = t;
          }
        }
        for (Index j = t + 1; j < d.cols(); ++j) {
          if (d(t, j) != 0 && abs_value(d(t, j)) < best) {
            best = abs_value(d(t, j));
            best_i = t;
            best_j = j;
          }
        }
        swap_rows(t, best_i);
        swap_cols(t, best_j);
        continue;
      }
      // Divisibility chain: fold any offending row into row t.
      Index offender = -1;
      for (Index i = t + 1; i < d.rows() && offender < 0; ++i) {
        for (Index j = t + 1; j < d.cols(); ++j) {
          if (d(i, j) != 0 && d(i, j) % d(t, t) != 0) {
            offender = i;
            break;
          }
        }
      }
      if (offender < 0) break;
      d.row(t) += d.row(offender);
      f.u.row(t) += f.u.row(offender);
    }
    if (d(t, t).sign() < 0) {
      d.row(t) *= Integer(-1);
      f.u.row(t) *= Integer(-1);
    }
  }
  f.rank = t;
  return f;
}

IntMatrix hermite_normal_form(const IntMatrix& input) {
  IntMatrix m = input;
  Index r = 0;
  for (Index col = 0; col < m.cols() && r < m.rows(); ++col) {
    // Euclid on column entries at or below row r until one survives.
    for (;;) {
      Index best = -1;
      for (Index i = r; i < m.rows(); ++i) {
        if (m(i, col) == 0) continue;
        if (best < 0 || abs_value(m(i, col)) < abs_value(m(best, col))) best = i;
      }
      if (best < 0) break;
      m.row(r).swap(m.row(best));
      bool done = true;
      for (Index i = r + 1; i < m.rows(); ++i) {
        if (m(i, col) == 0) continue;
        const Integer q = trunc_quotient(m(i, col), m(r, col));
        m.row(i) -= q * m.row(r);
        if (m(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (m(r, col) == 0) continue;
    if (m(r, col).sign() < 0) m.row(r) *= Integer(-1);
    const Integer pivot = m(r, col);
    for (Index i = 0; i < r; ++i) {
      Integer q = m(i, col) / pivot;
      if (m(i, col) - q * pivot < 0) q -= 1;  // floor division
      if (q != 0) m.row(i) -= q * m.row(r);
    }
    ++r;
  }
  return m.topRows(r);
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const SmithForm f = smith_normal_form(m);
  const Index dim = m.cols() - f.rank;
  IntMatrix out(dim, m.cols());
  for (Index k = 0; k < dim; ++k) out.row(k) = f.v.col(f.rank + k).transpose();
  return out;
}

IntMatrix unimodular_inverse(const IntMatrix& m) { return to_integer(inverse(to_rational(m))); }

IntMatrix saturate_rows(const IntMatrix& rows) {
  if (rows.rows() == 0) return IntMatrix(0, rows.cols());
  const SmithForm f = smith_normal_form(rows);
  // rows = u^-1 d v^-1, so the rational row space is spanned by the first
  // rank rows of v^-1, which extend to a unimodular basis.
  const IntMatrix v_inverse = unimodular_inverse(f.v);
  return hermite_normal_form(v_inverse.topRows(f.rank));
}

Index row_rank(const IntMatrix& rows) {
  if (rows.rows() == 0) return 0;
  return rank(rows);
}

bool same_row_lattice(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) return false;
  const IntMatrix ha = hermite_normal_form(a), hb = hermite_normal_form(b);
  return ha.rows() == hb.rows() && ha == hb;
}

}  // namespace salemlat
