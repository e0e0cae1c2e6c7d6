#pragma once

// Isometries of Gram lattices: verification, order, spectral classification,
// entropy, and expression of commuting isometries as polynomials.

#include "salemlat/lattice.hpp"
#include "salemlat/polyalg.hpp"

#include <optional>
#include <vector>

namespace salemlat {

/// Integer matrix acting on column coordinate vectors with
/// M^T G M = G and det M = ±1.  Built only through verify_isometry.
class LatticeIsometry {
 public:
  const IntMatrix& matrix() const { return matrix_; }
  const GramLattice& lattice() const { return lattice_; }
  int determinant() const { return determinant_; }

 private:
  friend LatticeIsometry verify_isometry(const IntMatrix& m, const GramLattice& l);
  LatticeIsometry(IntMatrix m, GramLattice l, int det)
      : matrix_(std::move(m)), lattice_(std::move(l)), determinant_(det) {}

  IntMatrix matrix_;
  GramLattice lattice_;
  int determinant_ = 1;
};

/// M^T G M differs from G at entry (i, j).
class GramViolationError : public Error {
 public:
  GramViolationError(Index i, Index j);
  Index row() const { return i_; }
  Index col() const { return j_; }

 private:
  Index i_, j_;
};

class DeterminantError : public Error {
 public:
  using Error::Error;
};

class NonCommutingError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class ReducibleCharpolyError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

LatticeIsometry verify_isometry(const IntMatrix& m, const GramLattice& l);

/// det(tI - M).
IntPolynomial char_poly(const LatticeIsometry& g);
IntPolynomial char_poly(const IntMatrix& m);

/// Least k >= 1 with g^k = I, or nullopt when g has infinite order.
std::optional<unsigned long long> order(const LatticeIsometry& g);

enum class IsometryKind {
  FiniteOrder,
  SalemType,
  MixedSpectrum,
  /// Every eigenvalue a root of unity but infinite order (non-trivial
  /// unipotent part), e.g. a parabolic translation.
  QuasiUnipotent,
};

std::string to_string(IsometryKind kind);

struct IsometryClassification {
  IsometryKind kind = IsometryKind::FiniteOrder;
  std::optional<unsigned long long> order;      ///< FiniteOrder
  std::optional<SalemCertificate> certificate;  ///< SalemType
  int determinant = 1;
  std::vector<std::pair<IntPolynomial, int>> factors;  ///< irreducible factorization of the char poly
};

IsometryClassification classify_isometry(const LatticeIsometry& g, const Rational& precision = Rational(1, 1000000000));

/// Characteristic polynomial is f^m with f irreducible.
bool is_primary_charpoly(const LatticeIsometry& g);
/// Characteristic polynomial is squarefree.
bool has_simple_spectrum(const LatticeIsometry& g);

/// Enclosure of log(spectral radius), narrower than `precision`.
RationalInterval entropy(const LatticeIsometry& g, const Rational& precision);

/// Coefficients c_0..c_{n-1} with G = sum c_k F^k, or nullopt if none exist.
std::optional<std::vector<Rational>> express_in_powers(const LatticeIsometry& f, const LatticeIsometry& g);

/// g v == v for an isotropic vector v.
bool fixes_isotropic_ray(const LatticeIsometry& g, const IntVector& v);

class NotInvariantError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// The action of g on a g-stable sublattice, in the sublattice's own basis.
LatticeIsometry restrict_to_sublattice(const LatticeIsometry& g, const SublatticeEmbedding& s);

/// Reflection x -> x - 2 (x, w)/(w, w) w in a vector of norm ±1 or ±2.
IntMatrix reflection(const GramLattice& l, const IntVector& w);

}  // namespace salemlat
