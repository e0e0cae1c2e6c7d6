#pragma once

// The K3 lattice construction: sublattices cut out by a prime selection,
// the parabolic isometries phi_i and their extensions Phi_i to the whole
// K3 lattice, the exact period point, and the rank of the group they span.

#include "salemlat/isometry.hpp"
#include "salemlat/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace salemlat {

struct PrimeSelection {
  Integer p;
  Integer q;
  std::vector<Integer> p_list;  ///< 8 primes scaling v_11..v_18
  std::vector<Integer> q_list;  ///< 8 primes scaling v_21..v_28
};

/// p = 2, q = 3, p_list = 37..67, q_list = 71..103.
PrimeSelection default_primes();

/// Throws PreconditionError unless all 18 entries are pairwise distinct primes
/// and both lists have length 8.
void validate(const PrimeSelection& primes);

/// x0 + x1·√2 + x2·ω + x3·√2·ω in Q(√2, ω) with ω² = -A.
class QuarticAlgebraElement {
 public:
  QuarticAlgebraElement() = default;
  QuarticAlgebraElement(Integer a, Rational x0, Rational x1 = 0, Rational x2 = 0, Rational x3 = 0);

  const Integer& a() const { return a_; }
  const Rational& operator[](int k) const { return x_[k]; }
  bool is_zero() const;
  /// ω -> -ω, fixing √2.
  QuarticAlgebraElement conjugate() const;

  QuarticAlgebraElement& operator+=(const QuarticAlgebraElement& o);
  QuarticAlgebraElement& operator-=(const QuarticAlgebraElement& o);

  friend QuarticAlgebraElement operator+(QuarticAlgebraElement x, const QuarticAlgebraElement& y) { return x += y; }
  friend QuarticAlgebraElement operator-(QuarticAlgebraElement x, const QuarticAlgebraElement& y) { return x -= y; }
  friend QuarticAlgebraElement operator*(const QuarticAlgebraElement& x, const QuarticAlgebraElement& y);
  friend QuarticAlgebraElement operator*(const Rational& c, const QuarticAlgebraElement& x);
  friend bool operator==(const QuarticAlgebraElement& x, const QuarticAlgebraElement& y);

  std::string to_string() const;

 private:
  Integer a_ = 1;
  Rational x_[4] = {0, 0, 0, 0};
};

/// Period vector in coordinates of a fixed lattice basis.
struct PeriodPoint {
  Integer a;  ///< ω² = -a
  std::vector<QuarticAlgebraElement> coordinates;

  PeriodPoint conjugate() const;
};

class WrongShapeError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Bilinear extension of the Gram form to the quartic algebra.
QuarticAlgebraElement pairing(const GramLattice& l, const PeriodPoint& x, const PeriodPoint& y);

/// σ = (√2, (-b + ω)/(2a), 1) for T̄ with Gram [[2a, b], [b, 2c]] and
/// T = Z·e0 ⊕ T̄, ω² = -(4ac - b²).
PeriodPoint period_point(const GramLattice& tbar, const GramLattice& t);

/// Saturation of the rational span of the four component vectors of σ,
/// with σ written in the basis of `l`.
SublatticeEmbedding minimal_primitive_sublattice(const PeriodPoint& sigma, const GramLattice& l);
/// Same, with σ written in the basis of `frame` and the result in the
/// ambient lattice of `frame`.
SublatticeEmbedding minimal_primitive_sublattice(const PeriodPoint& sigma, const SublatticeEmbedding& frame);

/// U^3 ⊕ E8(-1)^2 in the basis e0, f0, e1, f1, e2, f2, v11..v18, v21..v28.
GramLattice k3_lattice();

/// Every lattice of the construction, as rows in K3-lattice coordinates.
struct K3Lattices {
  PrimeSelection primes;
  GramLattice lambda;
  IntVector e0;
  IntVector f0;
  SublatticeEmbedding nbar;  ///< w_1..w_18
  SublatticeEmbedding n;     ///< e0, w_1..w_18
  SublatticeEmbedding l;     ///< e0, f0, w_1..w_18
  SublatticeEmbedding tbar;  ///< reduced basis of the complement of N̄ in U² ⊕ E8(-1)²
  SublatticeEmbedding t;     ///< e0 followed by the T̄ basis
};

K3Lattices build_sublattices(const PrimeSelection& primes);

struct NamedCheck {
  std::string name;
  bool pass = false;
  std::optional<IntVector> witness;  ///< K3-lattice coordinates
  std::string detail;
};

struct K3ConstructionReport {
  PrimeSelection primes;
  std::vector<NamedCheck> checks;
  Integer disc_order;
  std::vector<unsigned long long> extension_orders;
  std::optional<Index> group_rank;

  bool all_pass() const;
};

/// Signature, primitivity, definiteness and the norm -2 search.
K3ConstructionReport verify_construction(const PrimeSelection& primes);
K3ConstructionReport verify_construction(const K3Lattices& lattices);

/// phi_i (1-based i) on L with basis e0, f0, w_1..w_r.
LatticeIsometry build_phi(int i, const GramLattice& l);

class ExtensionOrderError : public Error {
 public:
  using Error::Error;
};

class NonIntegralExtensionError : public Error {
 public:
  using Error::Error;
};

/// Least k >= 1 with phi^k trivial on L*/L.  The search stops at
/// min(|L*/L| · exponent, budget) and throws ExtensionOrderError beyond it.
unsigned long long extension_order(const LatticeIsometry& phi, const GramLattice& l,
                                   unsigned long long budget = 100000);

/// The isometry of the ambient lattice acting as phi_power on L and as the
/// identity on T̄; L ⊕ T̄ must have full rank.
LatticeIsometry extend_to_lambda(const LatticeIsometry& phi_power, const SublatticeEmbedding& l_emb,
                                 const SublatticeEmbedding& tbar_emb);

struct TorelliCertificate {
  bool identity_on_t = false;  ///< hence Φσ = σ
  bool fixes_e0 = false;
  bool fixes_period = false;
  std::optional<IntVector> witness;  ///< first T generator moved, else e0's image

  bool pass() const { return identity_on_t && fixes_e0 && fixes_period; }
};

TorelliCertificate torelli_certificate(const LatticeIsometry& phi, const PeriodPoint& sigma,
                                       const SublatticeEmbedding& t_emb, const IntVector& e0);

class ShapeViolationError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// (m_1(g), ..., m_r(g)) with g(w_i) = w_i + m_i(g)·e0.
IntVector alpha_map(const LatticeIsometry& g, const K3Lattices& lattices);

Index group_rank_via_alpha(const std::vector<LatticeIsometry>& generators, const K3Lattices& lattices);

/// Everything one pipeline run produces.
struct K3Run {
  K3Lattices lattices;
  K3ConstructionReport report;
  std::vector<LatticeIsometry> phi;      ///< on L
  std::vector<LatticeIsometry> extended; ///< Phi_i on Λ; empty when skipped
  std::optional<PeriodPoint> period;
};

/// verify_construction, then (unless skipped or a check failed) build and
/// extend all phi_i, certify them and compute the group rank.
K3Run run_k3(const PrimeSelection& primes, bool skip_extension = false);

}  // namespace salemlat
