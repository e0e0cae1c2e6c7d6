#pragma once

// Unimodular normal forms over Z: Smith and Hermite.  These are the workhorses
// behind primitivity, complements, discriminant groups and subgroup ranks.

#include "salemlat/numeric.hpp"

namespace salemlat {

/// u * m * v == d with u, v unimodular and d diagonal, non-negative, each
/// diagonal entry dividing the next.
struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  Index rank = 0;

  std::vector<Integer> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Row-style Hermite normal form with zero rows dropped. Two integer row
/// spaces are equal iff their Hermite forms are equal.
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Rows form a Z-basis of {x in Z^n : m x = 0}; the result is saturated.
IntMatrix integer_kernel(const IntMatrix& m);

/// Rows form a Z-basis of (rowspace(rows) ⊗ Q) ∩ Z^n.  Dependent input rows
/// are allowed.
IntMatrix saturate_rows(const IntMatrix& rows);

/// Rank of the subgroup of Z^n generated by the rows.
Index row_rank(const IntMatrix& rows);

/// True iff both row lists generate the same subgroup of Z^n.
bool same_row_lattice(const IntMatrix& a, const IntMatrix& b);

/// Inverse of a unimodular matrix (exact, integral).
IntMatrix unimodular_inverse(const IntMatrix& m);

}  // namespace salemlat
