#pragma once

// Ranks of abelian images: the unipotent coordinates of isometries of a
// parabolic lattice and Smith-form ranks of integer vector families.

#include "salemlat/isometry.hpp"

#include <vector>

namespace salemlat {

/// g(v) = sign·v on the radical generator v and g(u_i) = u_i + vector_i·v on
/// the complement basis u_1..u_{r-1} from reduce_by_radical.
struct UnipotentCoordinates {
  int sign = 1;
  IntVector vector;
};

/// g does not act as the identity on L / radical.
class QuotientActionError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

UnipotentCoordinates parabolic_coordinates(const LatticeIsometry& g, const GramLattice& l);

/// Rank of the span of the coordinate vectors; at most rank(L) - 1.
Index parabolic_group_rank(const std::vector<LatticeIsometry>& generators, const GramLattice& l);

/// Rank of the subgroup of Z^k generated by the vectors.
Index abelian_rank_of_image(const std::vector<IntVector>& vectors);

}  // namespace salemlat
