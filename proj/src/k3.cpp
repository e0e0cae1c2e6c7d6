#include "salemlat/k3.hpp"

#include "salemlat/exact_linalg.hpp"
#include "salemlat/rankkit.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <numeric>
#include <set>

namespace salemlat {

namespace {

constexpr Index kE0 = 0, kF0 = 1, kE1 = 2, kF1 = 3, kE2 = 4, kF2 = 5;
constexpr Index kV1 = 6, kV2 = 14;  // v_11 and v_21
constexpr Index kK3Rank = 22;

IntVector unit(Index n, Index k) { return IntVector::Unit(n, k); }

IntMatrix stack(const std::vector<IntVector>& rows, Index n) {
  IntMatrix out(static_cast<Index>(rows.size()), n);
  for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Index>(i)) = rows[i].transpose();
  return out;
}

IntVector clear_denominators(const RatVector& v) {
  Integer l = 1;
  for (Index i = 0; i < v.size(); ++i) l = bmp::lcm(l, denominator(v(i)));
  IntVector out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(i) = numerator(v(i) * Rational(l));
  return out;
}

/// Some x with x^T G x > 0, by symmetric elimination over Q.
std::optional<IntVector> positive_norm_vector(const IntMatrix& gram) {
  const Index n = gram.rows();
  const RatMatrix g = to_rational(gram);
  RatMatrix p = RatMatrix::Identity(n, n);
  for (Index k = 0; k < n; ++k) {
    const RatMatrix h = p.transpose() * g * p;
    Index pivot = -1;
    for (Index c = k; c < n; ++c) {
      if (h(c, c) > 0) return clear_denominators(p.col(c));
      if (pivot < 0 && h(c, c) < 0) pivot = c;
    }
    if (pivot < 0) {
      // Zero diagonal: x_c ± x_j has norm ±2 h(c, j).
      for (Index c = k; c < n; ++c) {
        for (Index j = c + 1; j < n; ++j) {
          if (h(c, j) != 0) {
            RatVector x = p.col(j) + Rational(h(c, j).sign()) * p.col(c);
            return clear_denominators(x);
          }
        }
      }
      return std::nullopt;
    }
    p.col(k).swap(p.col(pivot));
    const Rational d = h(pivot, pivot);
    RatMatrix hs = p.transpose() * g * p;
    for (Index j = k + 1; j < n; ++j) {
      if (hs(k, j) != 0) p.col(j) -= (hs(k, j) / d) * p.col(k);
    }
  }
  return std::nullopt;
}

/// A non-zero kernel vector of the Gram matrix outside the given line, if any.
std::optional<IntVector> kernel_vector(const IntMatrix& gram, const std::optional<IntVector>& skip = std::nullopt) {
  const IntMatrix k = integer_kernel(gram);
  for (Index i = 0; i < k.rows(); ++i) {
    IntVector v = k.row(i).transpose();
    if (!skip) return v;
    if (rank(IntMatrix(stack({v, *skip}, v.size()))) == 2) return v;
  }
  return std::nullopt;
}

IntVector to_ambient(const SublatticeEmbedding& e, const IntVector& x) { return e.basis().transpose() * x; }

/// A vector of the saturation outside e, or nullopt when e is primitive.
std::optional<IntVector> primitivity_witness(const SublatticeEmbedding& e) {
  const IntMatrix sat = saturate_rows(e.basis());
  const RatMatrix bt = to_rational(IntMatrix(e.basis().transpose()));
  for (Index i = 0; i < sat.rows(); ++i) {
    auto x = solve(bt, to_rational(IntMatrix(sat.row(i).transpose())));
    if (!x || !is_integral(RatMatrix(*x))) return IntVector(sat.row(i).transpose());
  }
  return std::nullopt;
}

/// Lagrange–Gauss reduction of a positive definite rank-2 basis.
IntMatrix gauss_reduce(IntMatrix rows, const IntMatrix& gram) {
  auto pair = [&](Index i, Index j) { return bilinear(rows.row(i).transpose(), gram, rows.row(j).transpose()); };
  for (;;) {
    if (pair(0, 0) > pair(1, 1)) rows.row(0).swap(rows.row(1));
    const Rational mu(pair(0, 1), pair(0, 0));
    const Integer r = floor(mu + Rational(1, 2));
    if (r == 0) break;
    rows.row(1) -= r * rows.row(0);
    if (pair(1, 1) >= pair(0, 0)) break;
  }
  if (pair(0, 1) < 0) rows.row(1) = -rows.row(1);
  return rows;
}

NamedCheck make_check(std::string name, bool pass, std::optional<IntVector> witness = std::nullopt,
                      std::string detail = {}) {
  return NamedCheck{std::move(name), pass, std::move(witness), std::move(detail)};
}

}  // namespace

PrimeSelection default_primes() {
  PrimeSelection s;
  s.p = 2;
  s.q = 3;
  for (int v : {37, 41, 43, 47, 53, 59, 61, 67}) s.p_list.emplace_back(v);
  for (int v : {71, 73, 79, 83, 89, 97, 101, 103}) s.q_list.emplace_back(v);
  return s;
}

void validate(const PrimeSelection& primes) {
  if (primes.p_list.size() != 8 || primes.q_list.size() != 8) {
    throw PreconditionError("p_list and q_list must hold 8 primes each");
  }
  std::vector<Integer> all{primes.p, primes.q};
  all.insert(all.end(), primes.p_list.begin(), primes.p_list.end());
  all.insert(all.end(), primes.q_list.begin(), primes.q_list.end());
  std::set<Integer> seen;
  for (const auto& x : all) {
    if (x < 2 || !bmp::miller_rabin_test(x, 25)) throw PreconditionError(x.str() + " is not a prime");
    if (!seen.insert(x).second) throw PreconditionError("prime " + x.str() + " is used twice");
  }
}

// ---------------------------------------------------------------------------
// Quartic algebra

QuarticAlgebraElement::QuarticAlgebraElement(Integer a, Rational x0, Rational x1, Rational x2, Rational x3)
    : a_(std::move(a)), x_{std::move(x0), std::move(x1), std::move(x2), std::move(x3)} {
  if (a_ <= 0) throw PreconditionError("quartic algebra needs A > 0");
}

bool QuarticAlgebraElement::is_zero() const {
  return x_[0] == 0 && x_[1] == 0 && x_[2] == 0 && x_[3] == 0;
}

QuarticAlgebraElement QuarticAlgebraElement::conjugate() const {
  return QuarticAlgebraElement(a_, x_[0], x_[1], -x_[2], -x_[3]);
}

static void require_same_algebra(const QuarticAlgebraElement& x, const QuarticAlgebraElement& y) {
  if (x.a() != y.a()) throw PreconditionError("elements of different quartic algebras");
}

QuarticAlgebraElement& QuarticAlgebraElement::operator+=(const QuarticAlgebraElement& o) {
  require_same_algebra(*this, o);
  for (int k = 0; k < 4; ++k) x_[k] += o.x_[k];
  return *this;
}

QuarticAlgebraElement& QuarticAlgebraElement::operator-=(const QuarticAlgebraElement& o) {
  require_same_algebra(*this, o);
  for (int k = 0; k < 4; ++k) x_[k] -= o.x_[k];
  return *this;
}

QuarticAlgebraElement operator*(const QuarticAlgebraElement& x, const QuarticAlgebraElement& y) {
  require_same_algebra(x, y);
  const Rational a(x.a_);
  const auto& u = x.x_;
  const auto& v = y.x_;
  return QuarticAlgebraElement(x.a_, u[0] * v[0] + 2 * u[1] * v[1] - a * u[2] * v[2] - 2 * a * u[3] * v[3],
                               u[0] * v[1] + u[1] * v[0] - a * (u[2] * v[3] + u[3] * v[2]),
                               u[0] * v[2] + u[2] * v[0] + 2 * (u[1] * v[3] + u[3] * v[1]),
                               u[0] * v[3] + u[3] * v[0] + u[1] * v[2] + u[2] * v[1]);
}

QuarticAlgebraElement operator*(const Rational& c, const QuarticAlgebraElement& x) {
  return QuarticAlgebraElement(x.a_, c * x.x_[0], c * x.x_[1], c * x.x_[2], c * x.x_[3]);
}

bool operator==(const QuarticAlgebraElement& x, const QuarticAlgebraElement& y) {
  return x.a_ == y.a_ && x.x_[0] == y.x_[0] && x.x_[1] == y.x_[1] && x.x_[2] == y.x_[2] && x.x_[3] == y.x_[3];
}

std::string QuarticAlgebraElement::to_string() const {
  static const char* names[4] = {"", "*sqrt2", "*w", "*sqrt2*w"};
  std::string out;
  for (int k = 0; k < 4; ++k) {
    if (x_[k] == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + salemlat::to_string(x_[k]) + ")" + names[k];
  }
  return out.empty() ? "0" : out;
}

PeriodPoint PeriodPoint::conjugate() const {
  PeriodPoint out{a, {}};
  for (const auto& c : coordinates) out.coordinates.push_back(c.conjugate());
  return out;
}

QuarticAlgebraElement pairing(const GramLattice& l, const PeriodPoint& x, const PeriodPoint& y) {
  const Index n = l.rank();
  if (static_cast<Index>(x.coordinates.size()) != n || static_cast<Index>(y.coordinates.size()) != n) {
    throw PreconditionError("period coordinates do not match the lattice rank");
  }
  QuarticAlgebraElement acc(x.a, 0);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (l.gram()(i, j) != 0) acc += Rational(l.gram()(i, j)) * (x.coordinates[i] * y.coordinates[j]);
    }
  }
  return acc;
}

PeriodPoint period_point(const GramLattice& tbar, const GramLattice& t) {
  if (tbar.rank() != 2 || !tbar.is_even()) throw WrongShapeError("T̄ must be an even lattice of rank 2");
  const Integer a = tbar.gram()(0, 0) / 2, b = tbar.gram()(0, 1), c = tbar.gram()(1, 1) / 2;
  const Integer big_a = 4 * a * c - b * b;
  if (a <= 0 || big_a <= 0) throw WrongShapeError("T̄ is not positive definite");
  IntMatrix expected = IntMatrix::Zero(3, 3);
  expected.bottomRightCorner(2, 2) = tbar.gram();
  if (t.gram() != expected) throw WrongShapeError("T must be Z·e0 ⊕ T̄ with e0 isotropic");
  const Rational two_a(2 * a);
  PeriodPoint s{big_a, {}};
  s.coordinates.emplace_back(big_a, 0, 1);
  s.coordinates.emplace_back(big_a, Rational(-b) / two_a, 0, 1 / two_a);
  s.coordinates.emplace_back(big_a, 1);
  return s;
}

static IntMatrix component_rows(const PeriodPoint& sigma, const IntMatrix& frame) {
  const Index n = frame.cols();
  std::vector<IntVector> rows;
  for (int c = 0; c < 4; ++c) {
    RatVector v = RatVector::Zero(n);
    for (Index k = 0; k < frame.rows(); ++k) {
      const Rational& x = sigma.coordinates[static_cast<std::size_t>(k)][c];
      if (x != 0) v += x * to_rational(IntMatrix(frame.row(k).transpose()));
    }
    IntVector iv = clear_denominators(v);
    if (!iv.isZero()) rows.push_back(iv);
  }
  return stack(rows, n);
}

SublatticeEmbedding minimal_primitive_sublattice(const PeriodPoint& sigma, const GramLattice& l) {
  return minimal_primitive_sublattice(sigma, SublatticeEmbedding(l, identity(l.rank())));
}

SublatticeEmbedding minimal_primitive_sublattice(const PeriodPoint& sigma, const SublatticeEmbedding& frame) {
  if (static_cast<Index>(sigma.coordinates.size()) != frame.rank()) {
    throw PreconditionError("period coordinates do not match the frame rank");
  }
  const IntMatrix rows = component_rows(sigma, frame.basis());
  if (rows.rows() == 0) return SublatticeEmbedding(frame.ambient(), IntMatrix(0, frame.ambient().rank()));
  return SublatticeEmbedding(frame.ambient(), saturate_rows(rows));
}

// ---------------------------------------------------------------------------
// Sublattices and checks

GramLattice k3_lattice() {
  const GramLattice u = hyperbolic_plane();
  return direct_sum(direct_sum(direct_sum(u, u), direct_sum(u, e8_negative())), e8_negative());
}

K3Lattices build_sublattices(const PrimeSelection& primes) {
  validate(primes);
  const GramLattice lambda = k3_lattice();
  const Index n = kK3Rank;
  const IntVector e0 = unit(n, kE0), f0 = unit(n, kF0);

  std::vector<IntVector> w;
  w.push_back(unit(n, kE1) - primes.p * unit(n, kF1));
  w.push_back(unit(n, kE2) - primes.q * unit(n, kF2));
  for (Index j = 0; j < 8; ++j) w.push_back(unit(n, kE1) - primes.p_list[j] * unit(n, kV1 + j));
  for (Index j = 0; j < 8; ++j) w.push_back(unit(n, kE2) - primes.q_list[j] * unit(n, kV2 + j));
  const IntMatrix wrows = stack(w, n);

  std::vector<IntVector> nrows{e0};
  nrows.insert(nrows.end(), w.begin(), w.end());
  std::vector<IntVector> lrows{e0, f0};
  lrows.insert(lrows.end(), w.begin(), w.end());

  // Complement of N̄ inside U1 ⊕ U2 ⊕ E8(-1)^2 (coordinates 2..21).
  const Index m = n - 2;
  const GramLattice inner(lambda.gram().bottomRightCorner(m, m));
  const SublatticeEmbedding nbar_inner(inner, wrows.rightCols(m));
  IntMatrix comp = orthogonal_complement(nbar_inner).basis();
  if (comp.rows() == 2) {
    const IntMatrix g2 = comp * inner.gram() * comp.transpose();
    if (g2(0, 0) > 0 && g2(1, 1) > 0 && g2(0, 0) * g2(1, 1) > g2(0, 1) * g2(0, 1)) comp = gauss_reduce(comp, inner.gram());
  }
  IntMatrix tbar_rows = IntMatrix::Zero(comp.rows(), n);
  tbar_rows.rightCols(m) = comp;
  IntMatrix t_rows(comp.rows() + 1, n);
  t_rows.row(0) = e0.transpose();
  t_rows.bottomRows(comp.rows()) = tbar_rows;

  return K3Lattices{primes,
                    lambda,
                    e0,
                    f0,
                    SublatticeEmbedding(lambda, wrows),
                    SublatticeEmbedding(lambda, stack(nrows, n)),
                    SublatticeEmbedding(lambda, stack(lrows, n)),
                    SublatticeEmbedding(lambda, tbar_rows),
                    SublatticeEmbedding(lambda, t_rows)};
}

bool K3ConstructionReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.pass; });
}

K3ConstructionReport verify_construction(const PrimeSelection& primes) {
  return verify_construction(build_sublattices(primes));
}

K3ConstructionReport verify_construction(const K3Lattices& lat) {
  K3ConstructionReport report;
  report.primes = lat.primes;

  const GramLattice nbar = lat.nbar.induced(), n = lat.n.induced(), l = lat.l.induced();
  const GramLattice tbar = lat.tbar.induced();
  const SignatureTriple sn = signature(n), sl = signature(l), snbar = signature(nbar);

  // Definiteness of N̄ decides most of the rest, so find its witness first.
  std::optional<IntVector> nbar_witness;
  std::string nbar_detail = "signature " + to_string(snbar);
  if (auto x = positive_norm_vector(nbar.gram())) {
    nbar_witness = to_ambient(lat.nbar, *x);
    nbar_detail += ", witness norm " + lat.lambda.norm(*nbar_witness).str();
  } else if (auto k = kernel_vector(nbar.gram())) {
    nbar_witness = to_ambient(lat.nbar, *k);
    nbar_detail += ", witness is isotropic and orthogonal to N̄";
  }
  const bool nbar_definite = !nbar_witness;

  {
    const bool ok = classify(n) == LatticeClass::Parabolic && n.rank() == 19;
    std::optional<IntVector> wit;
    if (!ok) {
      if (auto x = positive_norm_vector(n.gram())) {
        wit = to_ambient(lat.n, *x);
      } else if (auto k = kernel_vector(n.gram(), unit(n.rank(), 0))) {
        wit = to_ambient(lat.n, *k);
      }
    }
    report.checks.push_back(make_check("n_parabolic_rank_19", ok, wit, "signature " + to_string(sn)));
  }
  {
    const bool ok = classify(l) == LatticeClass::Hyperbolic && l.rank() == 20;
    report.checks.push_back(make_check("l_hyperbolic_rank_20", ok, ok ? std::nullopt : nbar_witness,
                                       "signature " + to_string(sl)));
  }
  {
    auto wn = primitivity_witness(lat.n);
    report.checks.push_back(make_check("n_primitive", !wn, wn));
    auto wl = primitivity_witness(lat.l);
    report.checks.push_back(make_check("l_primitive", !wl, wl));
  }
  if (nbar_definite) {
    const Representation r = represents(n, -2);
    std::optional<IntVector> wit;
    if (r.witness) wit = to_ambient(lat.n, *r.witness);
    report.checks.push_back(make_check("n_no_norm_minus_2", !r.represented, r.represented ? wit : std::nullopt,
                                       "exhaustive search on N / Z·e0"));
  } else {
    report.checks.push_back(make_check("n_no_norm_minus_2", false, nbar_witness,
                                       "N is not semidefinite, so the search is not finite"));
  }
  report.checks.push_back(make_check("nbar_negative_definite", nbar_definite, nbar_witness, nbar_detail));
  {
    std::optional<IntVector> wit;
    if (tbar.rank() != 2) {
      wit = std::nullopt;
    } else if (auto x = positive_norm_vector(IntMatrix(-tbar.gram()))) {
      wit = to_ambient(lat.tbar, *x);
    } else if (auto k = kernel_vector(tbar.gram())) {
      wit = to_ambient(lat.tbar, *k);
    }
    const bool ok = tbar.rank() == 2 && !wit;
    report.checks.push_back(
        make_check("tbar_positive_definite_rank_2", ok, wit, "signature " + to_string(signature(tbar))));
  }
  report.disc_order = abs(determinant(l.gram()));
  return report;
}

// ---------------------------------------------------------------------------
// The isometries

LatticeIsometry build_phi(int i, const GramLattice& l) {
  const Index n = l.rank();
  const IntMatrix& g = l.gram();
  if (n < 3 || g(0, 0) != 0 || g(0, 1) != 1 || g(1, 1) != 0 || !g.topRightCorner(2, n - 2).isZero()) {
    throw WrongShapeError("L must be U ⊕ N̄ with basis e0, f0, w_1, ...");
  }
  const Index r = n - 2;
  if (i < 1 || i > r) throw PreconditionError("phi index out of range");
  const IntMatrix q = g.bottomRightCorner(r, r);
  const Integer m = determinant(q);
  if (m == 0) throw DegenerateLatticeError("the N̄ Gram matrix is singular");
  const IntMatrix adj = to_integer(RatMatrix(Rational(m) * inverse(to_rational(q))));
  const IntVector c = -adj.row(i - 1).transpose();
  const Integer twice_gamma = -bilinear(c, q, c);
  if (twice_gamma % 2 != 0) throw Error("the f0 correction is not integral");

  IntMatrix mat = identity(n);
  mat(0, 1) = twice_gamma / 2;
  mat.block(2, 1, r, 1) = c;
  mat(0, 1 + i) = m;
  return verify_isometry(mat, l);
}

unsigned long long extension_order(const LatticeIsometry& phi, const GramLattice& l, unsigned long long budget) {
  if (!(phi.lattice() == l)) throw PreconditionError("isometry acts on a different lattice");
  if (determinant(l.gram()) == 0) throw DegenerateLatticeError("extension order needs a nondegenerate lattice");
  const DiscriminantGroup dg = discriminant_group(l);
  const Integer exponent = dg.invariant_factors.empty() ? Integer(1) : dg.invariant_factors.back();
  const Integer cap = dg.order * exponent;
  const unsigned long long limit = cap < budget ? cap.convert_to<unsigned long long>() : budget;

  // Columns of G^{-1} are the dual basis; phi^k is trivial on L*/L exactly
  // when phi^k moves each of them by a vector of L.
  const RatMatrix dual = inverse(to_rational(l.gram()));
  const RatMatrix m = to_rational(phi.matrix());
  RatMatrix image = dual;
  for (unsigned long long k = 1; k <= limit; ++k) {
    image = m * image;
    if (is_integral(RatMatrix(image - dual))) return k;
  }
  throw ExtensionOrderError("no power up to " + std::to_string(limit) + " acts trivially on the discriminant group");
}

LatticeIsometry extend_to_lambda(const LatticeIsometry& phi_power, const SublatticeEmbedding& l_emb,
                                 const SublatticeEmbedding& tbar_emb) {
  if (!(l_emb.ambient() == tbar_emb.ambient())) throw PreconditionError("sublattices live in different lattices");
  if (!(phi_power.lattice() == l_emb.induced())) throw PreconditionError("isometry does not act on L");
  const Index n = l_emb.ambient().rank();
  if (l_emb.rank() + tbar_emb.rank() != n) throw PreconditionError("L ⊕ T̄ does not have full rank");
  IntMatrix b(n, n);
  b.topRows(l_emb.rank()) = l_emb.basis();
  b.bottomRows(tbar_emb.rank()) = tbar_emb.basis();
  if (determinant(b) == 0) throw PreconditionError("L and T̄ are not independent");

  IntMatrix block = identity(n);
  block.topLeftCorner(l_emb.rank(), l_emb.rank()) = phi_power.matrix();
  const RatMatrix bt = to_rational(IntMatrix(b.transpose()));
  const RatMatrix ext = bt * to_rational(block) * inverse(bt);
  if (!is_integral(ext)) throw NonIntegralExtensionError("extension is not integral on the ambient lattice");
  return verify_isometry(to_integer(ext), l_emb.ambient());
}

TorelliCertificate torelli_certificate(const LatticeIsometry& phi, const PeriodPoint& sigma,
                                       const SublatticeEmbedding& t_emb, const IntVector& e0) {
  if (!(phi.lattice() == t_emb.ambient())) throw PreconditionError("isometry and T live in different lattices");
  if (static_cast<Index>(sigma.coordinates.size()) != t_emb.rank()) {
    throw PreconditionError("period coordinates do not match T");
  }
  TorelliCertificate cert;
  cert.identity_on_t = true;
  for (Index k = 0; k < t_emb.rank(); ++k) {
    const IntVector t = t_emb.basis().row(k).transpose();
    const IntVector moved = phi.matrix() * t;
    if (moved != t) {
      cert.identity_on_t = false;
      if (!cert.witness) cert.witness = t;
    }
  }
  const IntVector image = phi.matrix() * e0;
  cert.fixes_e0 = image == e0;
  if (!cert.fixes_e0 && !cert.witness) cert.witness = image;

  // Φσ - σ, componentwise over the algebra basis.
  const IntMatrix moved_frame = t_emb.basis() * phi.matrix().transpose();
  const IntMatrix diff = moved_frame - t_emb.basis();
  cert.fixes_period = true;
  for (int c = 0; c < 4 && cert.fixes_period; ++c) {
    RatVector v = RatVector::Zero(diff.cols());
    for (Index k = 0; k < t_emb.rank(); ++k) {
      v += sigma.coordinates[static_cast<std::size_t>(k)][c] * to_rational(IntMatrix(diff.row(k).transpose()));
    }
    cert.fixes_period = v.isZero();
  }
  return cert;
}

IntVector alpha_map(const LatticeIsometry& g, const K3Lattices& lat) {
  if (!(g.lattice() == lat.lambda)) throw ShapeViolationError("isometry does not act on the K3 lattice");
  const IntMatrix& m = g.matrix();
  if (IntVector(m * lat.e0) != lat.e0) throw ShapeViolationError("isometry does not fix e0");
  for (Index k = 0; k < lat.tbar.rank(); ++k) {
    const IntVector t = lat.tbar.basis().row(k).transpose();
    if (IntVector(m * t) != t) throw ShapeViolationError("isometry moves T̄");
  }
  const Index r = lat.nbar.rank();
  IntVector out(r);
  for (Index i = 0; i < r; ++i) {
    const IntVector w = lat.nbar.basis().row(i).transpose();
    IntVector d = m * w - w;
    const Integer coeff = d(kE0);
    d(kE0) = 0;
    if (!d.isZero()) throw ShapeViolationError("isometry moves w_" + std::to_string(i + 1) + " off w + Z·e0");
    out(i) = coeff;
  }
  return out;
}

Index group_rank_via_alpha(const std::vector<LatticeIsometry>& generators, const K3Lattices& lat) {
  std::vector<IntVector> images;
  for (const auto& g : generators) images.push_back(alpha_map(g, lat));
  return abelian_rank_of_image(images);
}

K3Run run_k3(const PrimeSelection& primes, bool skip_extension) {
  K3Lattices lat = build_sublattices(primes);
  K3ConstructionReport report = verify_construction(lat);
  K3Run run{lat, report, {}, {}, std::nullopt};
  if (!run.report.all_pass()) return run;

  const GramLattice l = lat.l.induced();
  const int r = static_cast<int>(lat.nbar.rank());
  for (int i = 1; i <= r; ++i) {
    run.phi.push_back(build_phi(i, l));
    run.report.extension_orders.push_back(extension_order(run.phi.back(), l));
  }
  {
    const bool ok = std::all_of(run.report.extension_orders.begin(), run.report.extension_orders.end(),
                                [&](unsigned long long k) { return Integer(k) <= run.report.disc_order; });
    run.report.checks.push_back(make_check("extension_orders_within_discriminant_order", ok));
  }
  if (skip_extension) return run;

  for (int i = 0; i < r; ++i) {
    const IntMatrix power = matrix_power(run.phi[i].matrix(), run.report.extension_orders[i]);
    run.extended.push_back(extend_to_lambda(verify_isometry(power, l), lat.l, lat.tbar));
  }
  {
    bool ok = true;
    for (int i = 0; i < r && ok; ++i) {
      const IntMatrix power = matrix_power(run.phi[i].matrix(), run.report.extension_orders[i]);
      ok = restrict_to_sublattice(run.extended[i], lat.l).matrix() == power &&
           restrict_to_sublattice(run.extended[i], lat.tbar).matrix() == identity(lat.tbar.rank());
    }
    run.report.checks.push_back(make_check("extensions_restrict_to_phi_power_and_identity", ok));
  }
  {
    bool ok = true;
    std::string detail;
    for (int i = 0; i < r && ok; ++i) {
      for (int j = i + 1; j < r && ok; ++j) {
        const IntMatrix& a = run.extended[i].matrix();
        const IntMatrix& b = run.extended[j].matrix();
        if (IntMatrix(a * b) != IntMatrix(b * a)) {
          ok = false;
          detail = "Phi_" + std::to_string(i + 1) + " and Phi_" + std::to_string(j + 1) + " do not commute";
        }
      }
    }
    run.report.checks.push_back(make_check("extensions_commute", ok, std::nullopt, detail));
  }

  const GramLattice t = lat.t.induced();
  run.period = period_point(lat.tbar.induced(), t);
  const PeriodPoint& sigma = *run.period;
  {
    const QuarticAlgebraElement ss = pairing(t, sigma, sigma);
    const QuarticAlgebraElement sb = pairing(t, sigma, sigma.conjugate());
    const Integer a = lat.tbar.induced().gram()(0, 0) / 2;
    const bool ok = ss.is_zero() && sb == QuarticAlgebraElement(sigma.a, Rational(sigma.a, a));
    run.report.checks.push_back(
        make_check("period_identities", ok, std::nullopt, "(s,s) = " + ss.to_string() + ", (s,sbar) = " + sb.to_string()));
  }
  {
    const SublatticeEmbedding tr = minimal_primitive_sublattice(sigma, lat.t);
    run.report.checks.push_back(make_check("transcendental_lattice_is_t", same_row_lattice(tr.basis(), lat.t.basis())));
  }
  {
    bool ok = true;
    std::optional<IntVector> wit;
    for (int i = 0; i < r && ok; ++i) {
      const TorelliCertificate c = torelli_certificate(run.extended[i], sigma, lat.t, lat.e0);
      ok = c.pass();
      wit = c.witness;
    }
    run.report.checks.push_back(make_check("extensions_fix_t_and_e0", ok, ok ? std::nullopt : wit));
  }
  const Index rank_alpha = group_rank_via_alpha(run.extended, lat);
  run.report.checks.push_back(
      make_check("alpha_rank_18", rank_alpha == 18, std::nullopt, "rank " + std::to_string(rank_alpha)));
  if (run.report.all_pass()) run.report.group_rank = rank_alpha;
  return run;
}

}  // namespace salemlat
