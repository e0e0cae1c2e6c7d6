#include "salemlat/isometry.hpp"

#include "salemlat/exact_linalg.hpp"

#include <numeric>

namespace salemlat {

GramViolationError::GramViolationError(Index i, Index j)
    : Error("matrix does not preserve the Gram form at entry (" + std::to_string(i) + ", " + std::to_string(j) + ")"),
      i_(i),
      j_(j) {}

LatticeIsometry verify_isometry(const IntMatrix& m, const GramLattice& l) {
  if (m.rows() != m.cols() || m.rows() != l.rank()) {
    throw PreconditionError("isometry matrix must be square of the lattice rank");
  }
  IntMatrix pulled = m.transpose() * l.gram() * m;
  for (Index i = 0; i < pulled.rows(); ++i) {
    for (Index j = 0; j < pulled.cols(); ++j) {
      if (pulled(i, j) != l.gram()(i, j)) throw GramViolationError(i, j);
    }
  }
  Integer det = determinant(m);
  if (abs(det) != 1) throw DeterminantError("isometry determinant is " + det.str() + ", expected ±1");
  return LatticeIsometry(m, l, det.sign());
}

IntPolynomial char_poly(const IntMatrix& m) { return IntPolynomial(characteristic_coefficients(m)); }

IntPolynomial char_poly(const LatticeIsometry& g) { return char_poly(g.matrix()); }

std::optional<unsigned long long> order(const LatticeIsometry& g) {
  const IntPolynomial chi = char_poly(g);
  if (!is_cyclotomic_product(chi)) return std::nullopt;
  unsigned long long bound = 1;
  for (const auto& [f, m] : factor_over_integers(chi)) {
    auto n = cyclotomic_order(f);
    if (!n) throw Error("cyclotomic product with a non-cyclotomic factor " + f.to_string());
    bound = std::lcm(bound, *n);
  }
  const IntMatrix id = identity(g.matrix().rows());
  if (matrix_power(g.matrix(), bound) != id) return std::nullopt;
  for (unsigned long long d = 1; d <= bound; ++d) {
    if (bound % d == 0 && matrix_power(g.matrix(), d) == id) return d;
  }
  return bound;
}

std::string to_string(IsometryKind kind) {
  switch (kind) {
    case IsometryKind::FiniteOrder:
      return "finite_order";
    case IsometryKind::SalemType:
      return "salem";
    case IsometryKind::MixedSpectrum:
      return "mixed_spectrum";
    case IsometryKind::QuasiUnipotent:
      return "quasi_unipotent";
  }
  return "unknown";
}

IsometryClassification classify_isometry(const LatticeIsometry& g, const Rational& precision) {
  IsometryClassification out;
  out.determinant = g.determinant();
  const IntPolynomial chi = char_poly(g);
  out.factors = factor_over_integers(chi);
  if (is_cyclotomic_product(chi)) {
    out.order = order(g);
    out.kind = out.order ? IsometryKind::FiniteOrder : IsometryKind::QuasiUnipotent;
    return out;
  }
  if (chi.degree() >= 2) {
    SalemClassification s = classify_salem(chi, precision);
    if (s.is_salem()) {
      if (g.determinant() != 1) throw Error("Salem characteristic polynomial with determinant -1");
      out.kind = IsometryKind::SalemType;
      out.certificate = std::move(s.certificate);
      return out;
    }
  }
  out.kind = IsometryKind::MixedSpectrum;
  return out;
}

bool is_primary_charpoly(const LatticeIsometry& g) {
  const IntPolynomial chi = char_poly(g);
  if (chi.degree() <= 0) return false;
  return factor_over_integers(chi).size() == 1;
}

bool has_simple_spectrum(const LatticeIsometry& g) {
  const IntPolynomial chi = char_poly(g);
  return gcd(chi, chi.derivative()).degree() <= 0;
}

RationalInterval entropy(const LatticeIsometry& g, const Rational& precision) {
  if (precision.sign() <= 0) throw PreconditionError("precision must be positive");
  const IntPolynomial chi = char_poly(g);
  if (chi.degree() <= 0 || is_cyclotomic_product(chi)) return RationalInterval::point(0);
  // log is 1-Lipschitz on [1, inf), so half the budget on the radius suffices.
  const Rational radius_precision = precision / 2;
  RationalInterval radius;
  if (chi.degree() >= 2 && is_reciprocal(chi) && classify_salem(chi, radius_precision).is_salem()) {
    radius = salem_number_enclosure(chi, radius_precision);
  } else {
    radius = spectral_radius_enclosure(chi, radius_precision);
  }
  if (radius.lo < 1) radius.lo = 1;  // isometries have spectral radius >= 1
  RationalInterval h = log_enclosure(radius);
  if (h.lo.sign() < 0) h.lo = 0;
  return h;
}

std::optional<std::vector<Rational>> express_in_powers(const LatticeIsometry& f, const LatticeIsometry& g) {
  if (!(f.lattice() == g.lattice())) throw PreconditionError("isometries act on different lattices");
  const IntMatrix& a = f.matrix();
  const IntMatrix& b = g.matrix();
  if (a * b != b * a) throw NonCommutingError("isometries do not commute");
  const IntPolynomial chi = char_poly(f);
  if (chi.degree() >= 1 && !is_irreducible_over_integers(chi)) {
    throw ReducibleCharpolyError("characteristic polynomial " + chi.to_string() + " is reducible");
  }
  const Index n = a.rows();
  // Columns of the system are vec(F^k).
  RatMatrix system(n * n, n);
  IntMatrix power = identity(n);
  for (Index k = 0; k < n; ++k) {
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) system(i * n + j, k) = Rational(power(i, j));
    }
    power = power * a;
  }
  RatVector rhs(n * n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) rhs(i * n + j) = Rational(b(i, j));
  }
  auto x = solve(system, rhs);
  if (!x) return std::nullopt;
  return std::vector<Rational>(x->data(), x->data() + x->size());
}

bool fixes_isotropic_ray(const LatticeIsometry& g, const IntVector& v) {
  if (v.size() != g.matrix().rows()) throw PreconditionError("vector has the wrong dimension");
  if (g.lattice().norm(v) != 0) throw PreconditionError("fixes_isotropic_ray needs an isotropic vector");
  return g.matrix() * v == v;
}

IntMatrix reflection(const GramLattice& l, const IntVector& w) {
  const Integer n = l.norm(w);
  if (n == 0 || 2 % n != 0) throw PreconditionError("reflection needs a vector of norm ±1 or ±2");
  const Integer factor = 2 / n;
  IntVector gw = l.gram() * w;
  return identity(l.rank()) - factor * w * gw.transpose();
}


LatticeIsometry restrict_to_sublattice(const LatticeIsometry& g, const SublatticeEmbedding& s) {
  if (!(s.ambient() == g.lattice())) throw PreconditionError("sublattice lives in a different lattice");
  // Columns of B^T are the sublattice generators; solve B^T X = g B^T.
  const RatMatrix bt = to_rational(IntMatrix(s.basis().transpose()));
  const RatMatrix images = to_rational(IntMatrix(g.matrix() * s.basis().transpose()));
  IntMatrix restricted(s.rank(), s.rank());
  for (Index j = 0; j < s.rank(); ++j) {
    auto x = solve(bt, images.col(j));
    if (!x || !is_integral(RatMatrix(*x))) {
      throw NotInvariantError("generator " + std::to_string(j) + " is not mapped into the sublattice");
    }
    restricted.col(j) = to_integer(*x);
  }
  return verify_isometry(restricted, s.induced());
}

}  // namespace salemlat
