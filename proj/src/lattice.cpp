#include "salemlat/lattice.hpp"

#include "salemlat/exact_linalg.hpp"

#include <algorithm>

namespace salemlat {

GramLattice::GramLattice(IntMatrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) throw PreconditionError("Gram matrix must be square");
  if (gram_ != gram_.transpose()) throw PreconditionError("Gram matrix must be symmetric");
  for (Index i = 0; i < gram_.rows(); ++i) {
    if (bmp::bit_test(abs(gram_(i, i)), 0)) even_ = false;
  }
}

GramLattice hyperbolic_plane() { return GramLattice(int_matrix({{0, 1}, {1, 0}})); }

GramLattice e8_negative() {
  IntMatrix g = IntMatrix::Zero(8, 8);
  for (Index i = 0; i < 8; ++i) g(i, i) = -2;
  const int edges[][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
  for (const auto& e : edges) {
    g(e[0] - 1, e[1] - 1) = 1;
    g(e[1] - 1, e[0] - 1) = 1;
  }
  return GramLattice(g);
}

GramLattice diagonal_lattice(const std::vector<long long>& entries) {
  IntMatrix g = IntMatrix::Zero(static_cast<Index>(entries.size()), static_cast<Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) g(static_cast<Index>(i), static_cast<Index>(i)) = entries[i];
  return GramLattice(g);
}

GramLattice direct_sum(const GramLattice& a, const GramLattice& b) {
  IntMatrix g = IntMatrix::Zero(a.rank() + b.rank(), a.rank() + b.rank());
  g.topLeftCorner(a.rank(), a.rank()) = a.gram();
  g.bottomRightCorner(b.rank(), b.rank()) = b.gram();
  return GramLattice(g);
}

GramLattice scaled(const GramLattice& l, const Integer& factor) {
  IntMatrix g = l.gram();
  for (Index i = 0; i < g.rows(); ++i) {
    for (Index j = 0; j < g.cols(); ++j) g(i, j) *= factor;
  }
  return GramLattice(g);
}

std::string to_string(const SignatureTriple& s) {
  return "(" + std::to_string(s.n_plus) + ", " + std::to_string(s.n_zero) + ", " + std::to_string(s.n_minus) + ")";
}

std::string to_string(LatticeClass c) {
  switch (c) {
    case LatticeClass::Hyperbolic:
      return "hyperbolic";
    case LatticeClass::Parabolic:
      return "parabolic";
    case LatticeClass::Elliptic:
      return "elliptic";
    case LatticeClass::Other:
      return "other";
  }
  return "other";
}

SignatureTriple signature(const GramLattice& l) {
  Inertia in = inertia(to_rational(l.gram()));
  return {in.positive, in.zero, in.negative};
}

LatticeClass classify(const GramLattice& l) {
  const SignatureTriple s = signature(l);
  if (s.n_plus == 1 && s.n_zero == 0) return LatticeClass::Hyperbolic;
  if (s.n_plus == 0 && s.n_zero == 1) return LatticeClass::Parabolic;
  if (s.n_plus == 0 && s.n_zero == 0) return LatticeClass::Elliptic;
  return LatticeClass::Other;
}

SublatticeEmbedding::SublatticeEmbedding(GramLattice ambient, IntMatrix basis)
    : ambient_(std::move(ambient)), basis_(std::move(basis)) {
  if (basis_.rows() == 0) basis_.resize(0, ambient_.rank());
  if (basis_.cols() != ambient_.rank()) throw PreconditionError("sublattice basis has the wrong number of columns");
  if (salemlat::rank(basis_) != basis_.rows()) throw PreconditionError("sublattice basis rows are linearly dependent");
}

GramLattice SublatticeEmbedding::induced() const {
  return GramLattice(basis_ * ambient_.gram() * basis_.transpose());
}

SublatticeEmbedding saturation(const SublatticeEmbedding& e) {
  if (e.rank() == 0) return e;
  return SublatticeEmbedding(e.ambient(), saturate_rows(e.basis()));
}

bool is_primitive(const SublatticeEmbedding& e) {
  if (e.rank() == 0) return true;
  return same_row_lattice(e.basis(), saturate_rows(e.basis()));
}

SublatticeEmbedding orthogonal_complement(const SublatticeEmbedding& e) {
  const Index n = e.ambient().rank();
  if (e.rank() == 0) return SublatticeEmbedding(e.ambient(), identity(n));
  IntMatrix pairing = e.basis() * e.ambient().gram();
  IntMatrix kernel = integer_kernel(pairing);
  if (kernel.rows() == 0) return SublatticeEmbedding(e.ambient(), IntMatrix(0, n));
  return SublatticeEmbedding(e.ambient(), hermite_normal_form(kernel));
}

std::optional<Integer> index_of_sum(const SublatticeEmbedding& a, const SublatticeEmbedding& b) {
  if (!(a.ambient() == b.ambient())) throw PreconditionError("sublattices live in different ambient lattices");
  const Index n = a.ambient().rank();
  IntMatrix stacked(a.rank() + b.rank(), n);
  stacked.topRows(a.rank()) = a.basis();
  stacked.bottomRows(b.rank()) = b.basis();
  SmithForm s = smith_normal_form(stacked);
  if (s.rank < n) return std::nullopt;
  Integer index = 1;
  for (const auto& d : s.diagonal()) index *= d;
  return index;
}

DiscriminantGroup discriminant_group(const GramLattice& l) {
  if (determinant(l.gram()) == 0) throw DegenerateLatticeError("discriminant group of a degenerate lattice");
  DiscriminantGroup out;
  for (const auto& d : smith_normal_form(l.gram()).diagonal()) {
    if (d > 1) {
      out.invariant_factors.push_back(d);
      out.order *= d;
    }
  }
  return out;
}

SublatticeEmbedding radical(const GramLattice& l) {
  IntMatrix kernel = integer_kernel(l.gram());
  if (kernel.rows() == 0) return SublatticeEmbedding(l, IntMatrix(0, l.rank()));
  return SublatticeEmbedding(l, hermite_normal_form(kernel));
}

RadicalQuotient reduce_by_radical(const GramLattice& l) {
  SublatticeEmbedding rad = radical(l);
  if (rad.rank() != 1) {
    throw PreconditionError("quotient by the radical needs a radical of rank 1, found rank " +
                            std::to_string(rad.rank()));
  }
  const Index n = l.rank();
  IntVector v = rad.basis().row(0).transpose();
  IntMatrix complement(n - 1, n);
  Index unit = -1;
  for (Index k = 0; k < n; ++k) {
    if (abs(v(k)) == 1) {
      bool only = true;
      for (Index j = 0; j < n; ++j) only = only && (j == k || v(j) == 0);
      if (only) unit = k;
    }
  }
  if (unit >= 0) {
    // v = ±e_k: the other standard basis vectors complete it.
    Index row = 0;
    for (Index k = 0; k < n; ++k) {
      if (k == unit) continue;
      complement.row(row) = IntVector::Unit(n, k).transpose();
      ++row;
    }
  } else {
    // u v^T w = (1, 0, ...) so the rows of w^{-1} are a basis starting with ±v.
    SmithForm s = smith_normal_form(IntMatrix(v.transpose()));
    IntMatrix basis = unimodular_inverse(s.v);
    complement = basis.bottomRows(n - 1);
  }
  return {GramLattice(complement * l.gram() * complement.transpose()), complement, v};
}

GramLattice quotient_by_radical(const GramLattice& l) { return reduce_by_radical(l).quotient; }

namespace {

/// All x != 0 with x^T G x == target for positive definite G (Fincke–Pohst
/// over exact rationals).
std::vector<IntVector> fincke_pohst(const IntMatrix& gram, const Integer& target) {
  const Index n = gram.rows();
  std::vector<IntVector> out;
  if (target <= 0 || n == 0) return out;
  // G = R^T D R with R unit upper triangular.
  RatMatrix r = RatMatrix::Identity(n, n);
  std::vector<Rational> d(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    Rational di = Rational(gram(i, i));
    for (Index k = 0; k < i; ++k) di -= d[k] * r(k, i) * r(k, i);
    if (di.sign() <= 0) throw IndefiniteLatticeError("form is not positive definite");
    d[i] = di;
    for (Index j = i + 1; j < n; ++j) {
      Rational v = Rational(gram(i, j));
      for (Index k = 0; k < i; ++k) v -= d[k] * r(k, i) * r(k, j);
      r(i, j) = v / di;
    }
  }
  IntVector x = IntVector::Zero(n);
  const Rational bound(target);
  // Depth-first from the last coordinate; `budget` is what the remaining
  // leading coordinates may still spend.
  auto recurse = [&](auto&& self, Index i, const Rational& budget) -> void {
    Rational center = 0;
    for (Index j = i + 1; j < n; ++j) center -= r(i, j) * Rational(x(j));
    auto [s_lo, s_hi] = sqrt_bounds(budget / d[i], 8);
    (void)s_lo;
    Integer lo = ceil(center - s_hi), hi = floor(center + s_hi);
    for (Integer xi = lo; xi <= hi; ++xi) {
      Rational t = Rational(xi) - center;
      Rational left = budget - d[i] * t * t;
      if (left.sign() < 0) continue;
      x(i) = xi;
      if (i == 0) {
        if (left.sign() == 0 && !x.isZero()) out.push_back(x);
      } else {
        self(self, i - 1, left);
      }
    }
    x(i) = 0;
  };
  recurse(recurse, n - 1, bound);
  return out;
}

bool first_nonzero_positive(const IntVector& v) {
  for (Index i = 0; i < v.size(); ++i) {
    if (v(i) != 0) return v(i) > 0;
  }
  return false;
}

bool lex_less(const IntVector& a, const IntVector& b) {
  for (Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return false;
}

}  // namespace

std::vector<IntVector> vectors_of_norm(const GramLattice& l, const Integer& target) {
  const SignatureTriple s = signature(l);
  if (s.n_zero != 0 || (s.n_plus != 0 && s.n_minus != 0)) {
    throw IndefiniteLatticeError("vectors_of_norm needs a definite lattice, signature " + to_string(s));
  }
  if (l.rank() == 0 || target == 0) return {};
  const bool negative = s.n_minus > 0;
  if ((negative && target > 0) || (!negative && target < 0)) {
    throw PreconditionError("target norm has the wrong sign for this lattice");
  }
  IntMatrix gram = negative ? IntMatrix(-l.gram()) : l.gram();
  Integer t = negative ? Integer(-target) : target;
  std::vector<IntVector> all = fincke_pohst(gram, t);
  std::vector<IntVector> out;
  for (auto& v : all) {
    if (first_nonzero_positive(v)) out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

Representation represents(const GramLattice& l, const Integer& target) {
  if (target == 0) return {true, IntVector::Zero(l.rank())};
  const SignatureTriple s = signature(l);
  const bool semidefinite = s.n_plus == 0 || s.n_minus == 0;
  if (semidefinite && s.n_zero == 0) {
    const bool negative = s.n_minus > 0;
    if (l.rank() == 0 || (negative && target > 0) || (!negative && target < 0)) return {false, std::nullopt};
    auto found = vectors_of_norm(l, target);
    if (found.empty()) return {false, std::nullopt};
    return {true, found.front()};
  }
  if (semidefinite && s.n_zero == 1) {
    // Norms are constant on cosets of the radical, so decide on L / radical
    // and lift the witness back.
    RadicalQuotient q = reduce_by_radical(l);
    Representation r = represents(q.quotient, target);
    if (r.witness) r.witness = IntVector(q.complement.transpose() * *r.witness);
    return r;
  }
  throw UnsupportedSignatureError("represents supports definite or parabolic lattices, signature " + to_string(s));
}

}  // namespace salemlat
