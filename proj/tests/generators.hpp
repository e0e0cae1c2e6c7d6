#pragma once

// Deterministic random isometries for property tests: products of
// reflections in vectors of norm ±2, conjugated by nothing else.  The seed
// can be overridden with SALEMLAT_SEED to reproduce a failing run.

#include "salemlat/isometry.hpp"

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

namespace gen {

using namespace salemlat;

inline std::uint64_t seed(std::uint64_t fallback) {
  if (const char* env = std::getenv("SALEMLAT_SEED")) return std::stoull(env);
  return fallback;
}

inline GramLattice a2_negative() { return GramLattice(int_matrix({{-2, 1}, {1, -2}})); }

/// Signature (1, 0, m) test lattices.
inline std::vector<GramLattice> hyperbolic_lattices() {
  GramLattice u = hyperbolic_plane();
  GramLattice m2 = diagonal_lattice({-2});
  return {direct_sum(u, m2), direct_sum(direct_sum(u, m2), m2), direct_sum(direct_sum(direct_sum(u, m2), m2), m2),
          direct_sum(u, a2_negative()), direct_sum(u, e8_negative())};
}

/// Signature (2, 0, t) test lattices.
inline std::vector<GramLattice> signature_two_lattices() {
  GramLattice u = hyperbolic_plane();
  GramLattice m2 = diagonal_lattice({-2});
  return {direct_sum(u, u), direct_sum(direct_sum(direct_sum(u, u), m2), m2), direct_sum(direct_sum(u, u), a2_negative())};
}

/// Signature (3, 0, t) test lattices.
inline std::vector<GramLattice> signature_three_lattices() {
  GramLattice u = hyperbolic_plane();
  return {direct_sum(direct_sum(u, u), u), direct_sum(direct_sum(direct_sum(u, u), u), diagonal_lattice({-2})),
          direct_sum(direct_sum(u, diagonal_lattice({2})), diagonal_lattice({-2}))};
}

/// Distinct real roots > 1 of a non-zero polynomial (factors x - 1 removed
/// first so 1 is never an endpoint root).
inline int roots_above_one(IntPolynomial p) {
  const IntPolynomial x_minus_one{-1, 1};
  while (p.degree() > 0) {
    auto q = exact_divide(p, x_minus_one);
    if (!q) break;
    p = *q;
  }
  if (p.degree() <= 0) return 0;
  return count_roots_above(squarefree_part(p), Rational(1));
}

/// All vectors of norm ±2 with coordinates in [-box, box].
inline std::vector<IntVector> roots_in_box(const GramLattice& l, int box) {
  std::vector<IntVector> out;
  const Index n = l.rank();
  IntVector x = IntVector::Constant(n, Integer(-box));
  for (;;) {
    Integer norm = l.norm(x);
    if (norm == 2 || norm == -2) out.push_back(x);
    Index i = n - 1;
    while (i >= 0 && x(i) == box) {
      x(i) = -box;
      --i;
    }
    if (i < 0) break;
    x(i) += 1;
  }
  return out;
}

class IsometrySampler {
 public:
  IsometrySampler(GramLattice lattice, std::uint64_t seed_value)
      : lattice_(std::move(lattice)), rng_(seed_value) {
    const int box = lattice_.rank() > 6 ? 1 : 2;
    roots_ = roots_in_box(lattice_, box);
    if (roots_.empty()) throw Error("no norm ±2 vectors found for the sampler");
  }

  const GramLattice& lattice() const { return lattice_; }

  LatticeIsometry next(int max_reflections = 6) {
    std::uniform_int_distribution<std::size_t> pick(0, roots_.size() - 1);
    std::uniform_int_distribution<int> length(1, max_reflections);
    IntMatrix m = identity(lattice_.rank());
    const int k = length(rng_);
    for (int i = 0; i < k; ++i) m = m * reflection(lattice_, roots_[pick(rng_)]);
    return verify_isometry(m, lattice_);
  }

 private:
  GramLattice lattice_;
  std::mt19937_64 rng_;
  std::vector<IntVector> roots_;
};

}  // namespace gen
