#pragma once

// Integer lattices with a symmetric bilinear form, their sublattices, and the
// invariants used throughout: signature, primitivity, complements,
// discriminant groups and vectors of a given norm.

#include "salemlat/numeric.hpp"
#include "salemlat/smith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace salemlat {

/// Z^n with the symmetric form given by an integer Gram matrix.
class GramLattice {
 public:
  GramLattice() = default;
  explicit GramLattice(IntMatrix gram);

  const IntMatrix& gram() const { return gram_; }
  Index rank() const { return gram_.rows(); }
  /// All diagonal entries even.
  bool is_even() const { return even_; }

  Integer pair(const IntVector& x, const IntVector& y) const { return bilinear(x, gram_, y); }
  Integer norm(const IntVector& x) const { return bilinear(x, gram_, x); }

  friend bool operator==(const GramLattice& a, const GramLattice& b) { return a.gram_ == b.gram_; }

 private:
  IntMatrix gram_;
  bool even_ = true;
};

GramLattice hyperbolic_plane();
/// E8 with the form negated: diagonal -2, +1 on the edges of the Dynkin
/// diagram in Bourbaki numbering (1-3, 3-4, 4-5, 5-6, 6-7, 7-8, 2-4).
GramLattice e8_negative();
GramLattice diagonal_lattice(const std::vector<long long>& entries);
GramLattice direct_sum(const GramLattice& a, const GramLattice& b);
/// Same module with every pairing multiplied by `factor`.
GramLattice scaled(const GramLattice& l, const Integer& factor);

struct SignatureTriple {
  Index n_plus = 0;
  Index n_zero = 0;
  Index n_minus = 0;

  friend bool operator==(const SignatureTriple&, const SignatureTriple&) = default;
};

std::string to_string(const SignatureTriple& s);

enum class LatticeClass { Hyperbolic, Parabolic, Elliptic, Other };

std::string to_string(LatticeClass c);

SignatureTriple signature(const GramLattice& l);
/// Hyperbolic (1,0,r-1), parabolic (0,1,r-1), elliptic (0,0,r), else Other.
LatticeClass classify(const GramLattice& l);

/// Sublattice of an ambient lattice spanned by the (independent) rows of
/// `basis`, written in ambient coordinates.
class SublatticeEmbedding {
 public:
  SublatticeEmbedding(GramLattice ambient, IntMatrix basis);

  const GramLattice& ambient() const { return ambient_; }
  const IntMatrix& basis() const { return basis_; }
  Index rank() const { return basis_.rows(); }
  /// basis · gram · basis^T
  GramLattice induced() const;

 private:
  GramLattice ambient_;
  IntMatrix basis_;
};

struct DiscriminantGroup {
  std::vector<Integer> invariant_factors;  ///< d_1 | d_2 | ..., all > 1
  Integer order = 1;
};

class DegenerateLatticeError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class IndefiniteLatticeError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class UnsupportedSignatureError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

SublatticeEmbedding saturation(const SublatticeEmbedding& e);
bool is_primitive(const SublatticeEmbedding& e);
SublatticeEmbedding orthogonal_complement(const SublatticeEmbedding& e);
/// Index of A + B in the ambient lattice; nullopt when A + B has lower rank.
std::optional<Integer> index_of_sum(const SublatticeEmbedding& a, const SublatticeEmbedding& b);
DiscriminantGroup discriminant_group(const GramLattice& l);
SublatticeEmbedding radical(const GramLattice& l);

/// L / radical for a lattice whose radical has rank one, together with the
/// rows (in coordinates of L) whose classes form the quotient basis.
struct RadicalQuotient {
  GramLattice quotient;
  IntMatrix complement;  ///< (n-1) x n
  IntVector radical_generator;
};

RadicalQuotient reduce_by_radical(const GramLattice& l);
GramLattice quotient_by_radical(const GramLattice& l);

/// Sign-pair representatives (first non-zero coordinate positive, ascending
/// lexicographic) of all non-zero v with v^T G v = target, L definite.
std::vector<IntVector> vectors_of_norm(const GramLattice& l, const Integer& target);

struct Representation {
  bool represented = false;
  std::optional<IntVector> witness;
};

/// Whether some vector of L has norm `target`; L definite or parabolic.
/// Target 0 is always represented by the zero vector.
Representation represents(const GramLattice& l, const Integer& target);

}  // namespace salemlat
