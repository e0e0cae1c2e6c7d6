#include "doctest.h"

#include "generators.hpp"
#include "salemlat/exact_linalg.hpp"
#include "salemlat/isometry.hpp"

using namespace salemlat;

namespace {

GramLattice pell_lattice() { return diagonal_lattice({2, -4}); }
IntMatrix pell_matrix() { return int_matrix({{3, 4}, {2, 3}}); }
GramLattice a2_positive() { return GramLattice(int_matrix({{2, 1}, {1, 2}})); }
IntMatrix rotation() { return int_matrix({{-1, -1}, {1, 0}}); }

IntMatrix block(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m = IntMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.bottomRightCorner(b.rows(), b.cols()) = b;
  return m;
}

Rational dec(const char* s) { return parse_rational(s); }

}  // namespace

TEST_CASE("verify_isometry") {
  CHECK(verify_isometry(identity(2), hyperbolic_plane()).determinant() == 1);
  auto pell = verify_isometry(pell_matrix(), pell_lattice());
  CHECK(pell.determinant() == 1);
  try {
    verify_isometry(int_matrix({{2, 0}, {0, 1}}), hyperbolic_plane());
    FAIL("expected a Gram violation");
  } catch (const GramViolationError& e) {
    CHECK(e.row() == 0);
    CHECK(e.col() == 1);
  }
  // Preserves the zero form but is not invertible over Z.
  CHECK_THROWS_AS(verify_isometry(int_matrix({{2}}), GramLattice(int_matrix({{0}}))), DeterminantError);
  CHECK_THROWS_AS(verify_isometry(identity(3), hyperbolic_plane()), PreconditionError);
}

TEST_CASE("char_poly and order") {
  CHECK(char_poly(verify_isometry(identity(2), hyperbolic_plane())) == IntPolynomial{1, -2, 1});
  CHECK(char_poly(verify_isometry(pell_matrix(), pell_lattice())) == IntPolynomial{1, -6, 1});
  CHECK(char_poly(verify_isometry(rotation(), a2_positive())) == IntPolynomial{1, 1, 1});
  CHECK(order(verify_isometry(IntMatrix(-identity(2)), hyperbolic_plane())) == 2ULL);
  CHECK(order(verify_isometry(rotation(), a2_positive())) == 3ULL);
  CHECK_FALSE(order(verify_isometry(pell_matrix(), pell_lattice())));
  // A parabolic translation: every eigenvalue 1, infinite order.
  GramLattice par = direct_sum(hyperbolic_plane(), diagonal_lattice({-2}));
  IntMatrix translation = int_matrix({{1, 1, -1}, {0, 1, 0}, {0, -1, 1}});
  // e0 -> e0, f0 -> f0 + e0 - w, w -> w - 2 e0 written column-wise.
  translation = int_matrix({{1, 1, -2}, {0, 1, 0}, {0, -1, 1}});
  auto t = verify_isometry(translation, par);
  CHECK_FALSE(order(t));
  CHECK(classify_isometry(t).kind == IsometryKind::QuasiUnipotent);
}

TEST_CASE("classify_isometry") {
  auto id = classify_isometry(verify_isometry(identity(3), diagonal_lattice({1, 1, -1})));
  CHECK(id.kind == IsometryKind::FiniteOrder);
  CHECK(id.order == 1ULL);

  auto pell = classify_isometry(verify_isometry(pell_matrix(), pell_lattice()), dec("1e-12"));
  REQUIRE(pell.kind == IsometryKind::SalemType);
  CHECK(pell.certificate->is_quadratic);
  CHECK(pell.determinant == 1);
  CHECK(pell.certificate->salem_number.lo > dec("5.828427"));
  CHECK(pell.certificate->salem_number.hi < dec("5.828428"));

  GramLattice l = direct_sum(diagonal_lattice({2, 2}), pell_lattice());
  auto mixed = classify_isometry(verify_isometry(block(IntMatrix(-identity(2)), pell_matrix()), l));
  REQUIRE(mixed.kind == IsometryKind::MixedSpectrum);
  REQUIRE(mixed.factors.size() == 2);
  CHECK(mixed.factors[0] == std::make_pair(IntPolynomial{1, 1}, 2));
  CHECK(mixed.factors[1] == std::make_pair(IntPolynomial{1, -6, 1}, 1));
}

TEST_CASE("primary and simple spectrum") {
  CHECK(is_primary_charpoly(verify_isometry(identity(3), diagonal_lattice({1, 1, 1}))));
  auto mixed = verify_isometry(block(rotation(), pell_matrix()), direct_sum(a2_positive(), pell_lattice()));
  CHECK_FALSE(is_primary_charpoly(mixed));
  CHECK(is_primary_charpoly(verify_isometry(pell_matrix(), pell_lattice())));
  CHECK_FALSE(has_simple_spectrum(verify_isometry(identity(2), hyperbolic_plane())));
  CHECK(has_simple_spectrum(verify_isometry(pell_matrix(), pell_lattice())));
  CHECK(has_simple_spectrum(verify_isometry(rotation(), a2_positive())));
}

TEST_CASE("entropy") {
  CHECK(entropy(verify_isometry(identity(2), hyperbolic_plane()), dec("1e-9")).width() == 0);
  auto pell = verify_isometry(pell_matrix(), pell_lattice());
  RationalInterval h = entropy(pell, dec("1e-12"));
  CHECK(h.width() < dec("1e-12"));
  CHECK(std::abs(to_double(h.midpoint()) - std::log(3 + 2 * std::sqrt(2.0))) < 1e-12);
  CHECK(h.lo > dec("1.76274"));
  CHECK(h.hi < dec("1.76275"));
  for (unsigned k = 1; k <= 3; ++k) {
    auto gk = verify_isometry(matrix_power(pell_matrix(), k), pell_lattice());
    RationalInterval hk = entropy(gk, dec("1e-12"));
    RationalInterval fine = entropy(pell, dec("1e-40"));
    CHECK(hk.contains(Rational(k) * fine.midpoint()));
  }
  GramLattice l = direct_sum(diagonal_lattice({2, 2}), pell_lattice());
  auto mixed = verify_isometry(block(IntMatrix(-identity(2)), pell_matrix()), l);
  CHECK(std::abs(to_double(entropy(mixed, dec("1e-12")).midpoint()) - std::log(3 + 2 * std::sqrt(2.0))) < 1e-12);
}

TEST_CASE("express_in_powers") {
  auto f = verify_isometry(pell_matrix(), pell_lattice());
  auto f2 = verify_isometry(matrix_power(pell_matrix(), 2), pell_lattice());
  CHECK(*express_in_powers(f, f2) == std::vector<Rational>{-1, 6});  // F^2 = 6F - 1
  CHECK(*express_in_powers(f, verify_isometry(identity(2), pell_lattice())) == std::vector<Rational>{1, 0});
  auto inv = verify_isometry(int_matrix({{3, -4}, {-2, 3}}), pell_lattice());
  CHECK(*express_in_powers(f, inv) == std::vector<Rational>{6, -1});
  auto rot = verify_isometry(rotation(), a2_positive());
  auto reflect = verify_isometry(int_matrix({{0, 1}, {1, 0}}), a2_positive());
  CHECK_THROWS_AS(express_in_powers(rot, reflect), NonCommutingError);
  CHECK_THROWS_AS(express_in_powers(verify_isometry(identity(2), pell_lattice()), f), ReducibleCharpolyError);
}

TEST_CASE("express_in_powers roundtrip on powers of Salem isometries") {
  gen::IsometrySampler sampler(gen::hyperbolic_lattices()[1], gen::seed(101));
  int checked = 0;
  for (int trial = 0; trial < 300 && checked < 20; ++trial) {
    auto f = sampler.next();
    IntPolynomial chi = char_poly(f);
    if (!is_irreducible_over_integers(chi)) continue;
    for (unsigned k : {2u, 3u}) {
      IntMatrix gk = matrix_power(f.matrix(), k);
      auto g = verify_isometry(gk, f.lattice());
      auto phi = express_in_powers(f, g);
      REQUIRE(phi);
      RatMatrix acc = RatMatrix::Zero(gk.rows(), gk.cols());
      RatMatrix power = RatMatrix::Identity(gk.rows(), gk.cols());
      for (const auto& c : *phi) {
        acc += c * power;
        power = power * to_rational(f.matrix());
      }
      CHECK(acc == to_rational(gk));
    }
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("fixes_isotropic_ray") {
  GramLattice par = direct_sum(hyperbolic_plane(), diagonal_lattice({-2}));
  IntVector e0 = int_vector({1, 0, 0});
  CHECK(fixes_isotropic_ray(verify_isometry(identity(3), par), e0));
  auto phi = verify_isometry(int_matrix({{1, 1, -2}, {0, 1, 0}, {0, -1, 1}}), par);
  CHECK(fixes_isotropic_ray(phi, e0));
  CHECK_FALSE(fixes_isotropic_ray(verify_isometry(IntMatrix(-identity(3)), par), e0));
  CHECK_THROWS_AS(fixes_isotropic_ray(phi, int_vector({0, 0, 1})), PreconditionError);
}

TEST_CASE("determinant and order invariants on random isometries") {
  int index = 0;
  for (const auto& l : gen::hyperbolic_lattices()) {
    gen::IsometrySampler sampler(l, gen::seed(500 + index++));
    for (int trial = 0; trial < 40; ++trial) {
      auto g = sampler.next();
      CHECK(g.determinant() * g.determinant() == 1);
      IntPolynomial chi = char_poly(g);
      const int n = chi.degree();
      CHECK(chi.constant_term() == (n % 2 == 0 ? 1 : -1) * g.determinant());
      auto ord = order(g);
      if (ord) {
        CHECK(matrix_power(g.matrix(), *ord) == identity(l.rank()));
      } else {
        auto c = classify_isometry(g);
        if (c.kind != IsometryKind::QuasiUnipotent) CHECK(entropy(g, dec("1e-6")).lo > 0);
      }
    }
  }
}

TEST_CASE("at most one eigenvalue outside the unit circle on hyperbolic lattices") {
  int index = 0;
  int salem_seen = 0;
  for (const auto& l : gen::hyperbolic_lattices()) {
    gen::IsometrySampler sampler(l, gen::seed(900 + index++));
    for (int trial = 0; trial < 200; ++trial) {
      auto g = sampler.next(8);
      IntPolynomial chi = char_poly(g);
      // Count on the reversed polynomial too: inverse eigenvalues mirror it.
      const int outside = count_roots_outside_unit_circle(chi);
      CHECK(outside <= 1);
      CHECK(count_roots_outside_unit_circle(chi.reversed()) == outside);
      auto c = classify_isometry(g);
      if (c.kind == IsometryKind::SalemType) {
        ++salem_seen;
        CHECK(c.determinant == 1);
      }
    }
  }
  CHECK(salem_seen > 0);
}

TEST_CASE("primary infinite-order isometries with one positive expanding eigenvalue are Salem") {
  // The transcendental-lattice hypothesis (an invariant positive 2-plane
  // coming from the period) cannot be sampled directly.  Its lattice-side
  // consequence is the root layout: exactly one eigenvalue outside the unit
  // circle, real and positive.  From there irreducibility, the Salem
  // property, det = +1 and a simple spectrum must follow.
  // Hyperbolic lattices stand in for the complement of the positive 2-plane.
  std::vector<GramLattice> lattices = gen::signature_two_lattices();
  for (const auto& l : gen::signature_three_lattices()) lattices.push_back(l);
  for (const auto& l : gen::hyperbolic_lattices()) lattices.push_back(l);
  int index = 0, exercised = 0, literal_counterexamples = 0;
  for (const auto& l : lattices) {
    gen::IsometrySampler sampler(l, gen::seed(1300 + index++));
    for (int trial = 0; trial < 250; ++trial) {
      auto g = sampler.next(8);
      if (!is_primary_charpoly(g) || order(g)) continue;
      auto c = classify_isometry(g);
      IntPolynomial chi = char_poly(g);
      if (count_roots_outside_unit_circle(chi) != 1 || gen::roots_above_one(chi) != 1) {
        if (c.kind == IsometryKind::MixedSpectrum) ++literal_counterexamples;
        continue;
      }
      ++exercised;
      CHECK(c.kind == IsometryKind::SalemType);
      CHECK(c.determinant == 1);
      CHECK(has_simple_spectrum(g));
    }
  }
  CHECK(exercised > 0);
  MESSAGE("exercised " << exercised << " isometries; " << literal_counterexamples
                       << " primary infinite-order samples outside the hypothesis were mixed-spectrum");
}
