#include "doctest.h"

#include "generators.hpp"
#include "salemlat/exact_linalg.hpp"
#include "salemlat/k3.hpp"
#include "salemlat/rankkit.hpp"

#include <complex>
#include <random>

using namespace salemlat;

namespace {

const K3Run& default_run() {
  static const K3Run run = run_k3(default_primes());
  return run;
}

PrimeSelection with_lists(long long p, long long q, std::vector<long long> ps, std::vector<long long> qs) {
  PrimeSelection s;
  s.p = p;
  s.q = q;
  for (auto v : ps) s.p_list.emplace_back(v);
  for (auto v : qs) s.q_list.emplace_back(v);
  return s;
}

const NamedCheck& check_named(const K3ConstructionReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return c;
  }
  throw std::runtime_error("no check " + name);
}

/// Whether x lies in the rational span of the rows.
bool in_span(const IntMatrix& rows, const IntVector& x) {
  IntMatrix stacked(rows.rows() + 1, rows.cols());
  stacked.topRows(rows.rows()) = rows;
  stacked.row(rows.rows()) = x.transpose();
  return rank(stacked) == rank(rows);
}

GramLattice toy_l() { return direct_sum(hyperbolic_plane(), diagonal_lattice({-2})); }

// Floating evaluation of the period pairings with ω = i·sqrt(A).
std::complex<long double> numeric_pairing(const IntMatrix& g, const std::vector<std::complex<long double>>& x,
                                          const std::vector<std::complex<long double>>& y) {
  std::complex<long double> acc = 0;
  for (Index i = 0; i < g.rows(); ++i) {
    for (Index j = 0; j < g.cols(); ++j) acc += static_cast<long double>(g(i, j).convert_to<long long>()) * x[i] * y[j];
  }
  return acc;
}

}  // namespace

TEST_CASE("k3_lattice invariants") {
  const GramLattice lambda = k3_lattice();
  CHECK(lambda.rank() == 22);
  CHECK(signature(lambda) == SignatureTriple{3, 0, 19});
  CHECK(discriminant_group(lambda).order == 1);
  CHECK(lambda.is_even());
}

TEST_CASE("prime selection validation") {
  CHECK_NOTHROW(validate(default_primes()));
  PrimeSelection dup = default_primes();
  dup.q_list[0] = dup.p_list[0];
  CHECK_THROWS_AS(validate(dup), PreconditionError);
  CHECK_THROWS_AS(build_sublattices(dup), PreconditionError);
  PrimeSelection composite = default_primes();
  composite.p = 4;
  CHECK_THROWS_AS(validate(composite), PreconditionError);
  PrimeSelection short_list = default_primes();
  short_list.p_list.pop_back();
  CHECK_THROWS_AS(validate(short_list), PreconditionError);
}

TEST_CASE("sublattices for the default primes") {
  const K3Lattices& lat = default_run().lattices;
  CHECK(lat.n.rank() == 19);
  CHECK(lat.l.rank() == 20);
  CHECK(classify(lat.l.induced()) == LatticeClass::Hyperbolic);
  CHECK(classify(lat.n.induced()) == LatticeClass::Parabolic);
  CHECK(lat.tbar.rank() == 2);
  CHECK(signature(lat.tbar.induced()) == SignatureTriple{2, 0, 0});

  // T is the full orthogonal complement of N in Λ.
  CHECK(same_row_lattice(orthogonal_complement(lat.n).basis(), lat.t.basis()));
  // L ⊥ T̄, and T̄ lives in U1 ⊕ U2 ⊕ E8(-1)^2.
  CHECK(IntMatrix(lat.l.basis() * lat.lambda.gram() * lat.tbar.basis().transpose()).isZero());
  CHECK(lat.tbar.basis().leftCols(2).isZero());
}

TEST_CASE("verify_construction with default primes") {
  const K3ConstructionReport r = verify_construction(default_primes());
  for (const auto& c : r.checks) {
    INFO(c.name);
    CHECK(c.pass);
    CHECK_FALSE(c.witness.has_value());
  }
  CHECK(r.checks.size() == 7);
  CHECK(r.disc_order == abs(determinant(default_run().lattices.l.induced().gram())));
}

TEST_CASE("failing selections carry positive-norm witnesses") {
  const std::vector<PrimeSelection> bad = {
      with_lists(2, 3, {7, 11, 13, 17, 19, 23, 29, 31}, {37, 41, 43, 47, 53, 59, 61, 67}),
      with_lists(29, 3, {2, 5, 7, 11, 13, 17, 19, 23}, {37, 41, 43, 47, 53, 59, 61, 67}),
  };
  for (const auto& s : bad) {
    const K3Lattices lat = build_sublattices(s);
    const K3ConstructionReport r = verify_construction(lat);
    CHECK_FALSE(r.all_pass());
    const NamedCheck& c = check_named(r, "nbar_negative_definite");
    CHECK_FALSE(c.pass);
    REQUIRE(c.witness.has_value());
    // Independent confirmation: the witness lies in N̄ ⊗ Q and has positive norm in Λ.
    CHECK(in_span(lat.nbar.basis(), *c.witness));
    CHECK(lat.lambda.norm(*c.witness) > 0);
    CHECK_FALSE(check_named(r, "n_parabolic_rank_19").pass);
    CHECK_FALSE(run_k3(s).report.group_rank.has_value());
  }
}

TEST_CASE("N has no vector of norm -2") {
  const K3Lattices& lat = default_run().lattices;
  // A second, independent search: norms on N only depend on the N̄ part.
  CHECK(vectors_of_norm(lat.nbar.induced(), Integer(-2)).empty());
  CHECK_FALSE(represents(lat.n.induced(), -2).represented);
}

TEST_CASE("build_phi on the toy lattice") {
  const LatticeIsometry phi = build_phi(1, toy_l());
  // Columns are the images of e0, f0, w1.
  CHECK(phi.matrix() == int_matrix({{1, 1, -2}, {0, 1, 0}, {0, -1, 1}}));
  CHECK(extension_order(phi, toy_l()) == 1);
  CHECK_THROWS_AS(build_phi(2, toy_l()), PreconditionError);
  CHECK_THROWS_AS(build_phi(1, direct_sum(diagonal_lattice({-2}), hyperbolic_plane())), WrongShapeError);
  CHECK_THROWS_AS(build_phi(1, direct_sum(hyperbolic_plane(), diagonal_lattice({0}))), DegenerateLatticeError);
}

TEST_CASE("phi_i on the default L") {
  const K3Run& run = default_run();
  const GramLattice l = run.lattices.l.induced();
  REQUIRE(run.phi.size() == 18);
  const IntVector e0 = IntVector::Unit(20, 0);
  for (const auto& phi : run.phi) {
    CHECK(phi.lattice() == l);
    CHECK(IntVector(phi.matrix() * e0) == e0);
    CHECK(is_cyclotomic_product(char_poly(phi)));
  }
  for (std::size_t i = 0; i < run.phi.size(); ++i) {
    for (std::size_t j = i + 1; j < run.phi.size(); ++j) {
      CHECK(IntMatrix(run.phi[i].matrix() * run.phi[j].matrix()) == IntMatrix(run.phi[j].matrix() * run.phi[i].matrix()));
    }
  }
  for (auto k : run.report.extension_orders) CHECK(Integer(k) <= run.report.disc_order);
}

TEST_CASE("extension_order") {
  CHECK(extension_order(verify_isometry(identity(3), toy_l()), toy_l()) == 1);
  const GramLattice six = diagonal_lattice({6});
  const LatticeIsometry minus = verify_isometry(int_matrix({{-1}}), six);
  CHECK(extension_order(minus, six) == 2);
  CHECK_THROWS_AS(extension_order(verify_isometry(identity(2), diagonal_lattice({2, 0})), diagonal_lattice({2, 0})),
                  DegenerateLatticeError);
}

TEST_CASE("extend_to_lambda") {
  // U with L = Z(e + 3f) and T̄ = Z(e - 3f).
  const GramLattice u = hyperbolic_plane();
  const SublatticeEmbedding l(u, int_matrix({{1, 3}}));
  const SublatticeEmbedding tb(u, int_matrix({{1, -3}}));
  const LatticeIsometry minus = verify_isometry(int_matrix({{-1}}), l.induced());
  CHECK_THROWS_AS(extend_to_lambda(minus, l, tb), NonIntegralExtensionError);
  const LatticeIsometry id = verify_isometry(identity(1), l.induced());
  CHECK(extend_to_lambda(id, l, tb).matrix() == identity(2));

  const K3Run& run = default_run();
  REQUIRE(run.extended.size() == 18);
  const K3Lattices& lat = run.lattices;
  for (std::size_t i = 0; i < run.extended.size(); ++i) {
    const LatticeIsometry& big = run.extended[i];
    CHECK(big.lattice() == lat.lambda);
    CHECK(restrict_to_sublattice(big, lat.t).matrix() == identity(3));
    CHECK(restrict_to_sublattice(big, lat.l).matrix() ==
          matrix_power(run.phi[i].matrix(), run.report.extension_orders[i]));
  }
  const LatticeIsometry lid = verify_isometry(identity(20), lat.l.induced());
  CHECK(extend_to_lambda(lid, lat.l, lat.tbar).matrix() == identity(22));
}

TEST_CASE("Phi_i pairwise commute") {
  const auto& ext = default_run().extended;
  for (std::size_t i = 0; i < ext.size(); ++i) {
    for (std::size_t j = i + 1; j < ext.size(); ++j) {
      CHECK(IntMatrix(ext[i].matrix() * ext[j].matrix()) == IntMatrix(ext[j].matrix() * ext[i].matrix()));
    }
  }
}

TEST_CASE("period_point identities") {
  const GramLattice tbar(int_matrix({{2, 1}, {1, 2}}));
  const GramLattice t = direct_sum(diagonal_lattice({0}), tbar);
  const PeriodPoint s = period_point(tbar, t);
  CHECK(s.a == 3);
  CHECK(pairing(t, s, s).is_zero());
  CHECK(pairing(t, s, s.conjugate()) == QuarticAlgebraElement(3, 3));

  const GramLattice square(int_matrix({{2, 0}, {0, 2}}));
  const PeriodPoint s4 = period_point(square, direct_sum(diagonal_lattice({0}), square));
  CHECK(s4.a == 4);
  CHECK(s4.coordinates[1] == QuarticAlgebraElement(4, 0, 0, Rational(1, 2)));
  CHECK(pairing(direct_sum(diagonal_lattice({0}), square), s4, s4).is_zero());

  CHECK_THROWS_AS(period_point(GramLattice(int_matrix({{2, 3}, {3, 2}})), t), WrongShapeError);
  CHECK_THROWS_AS(period_point(tbar, direct_sum(diagonal_lattice({2}), tbar)), WrongShapeError);
  CHECK_THROWS_AS(period_point(diagonal_lattice({2}), t), WrongShapeError);
}

TEST_CASE("period identities on reduced binary forms match floating evaluation") {
  for (long long a = 1; a <= 4; ++a) {
    for (long long b = -a; b <= a; ++b) {
      for (long long c = a; c <= 5; ++c) {
        if (4 * a * c - b * b <= 0) continue;
        const GramLattice tbar(int_matrix({{2 * a, b}, {b, 2 * c}}));
        const GramLattice t = direct_sum(diagonal_lattice({0}), tbar);
        const PeriodPoint s = period_point(tbar, t);
        const Integer big_a = 4 * a * c - b * b;
        CHECK(s.a == big_a);
        CHECK(pairing(t, s, s).is_zero());
        CHECK(pairing(t, s, s.conjugate()) == QuarticAlgebraElement(big_a, Rational(big_a, a)));

        const long double w = std::sqrt(static_cast<long double>(big_a.convert_to<long long>()));
        const std::complex<long double> x((-b) / (2.0L * a), w / (2.0L * a));
        std::vector<std::complex<long double>> v{std::sqrt(2.0L), x, 1}, vb{std::sqrt(2.0L), std::conj(x), 1};
        CHECK(std::abs(numeric_pairing(t.gram(), v, v)) < 1e-12L);
        const long double expected = static_cast<long double>(big_a.convert_to<long long>()) / a;
        CHECK(std::abs(numeric_pairing(t.gram(), v, vb) - expected) < 1e-12L);
      }
    }
  }
}

TEST_CASE("quartic algebra conjugation is an involutive ring map") {
  std::mt19937_64 rng(gen::seed(77));
  std::uniform_int_distribution<int> coeff(-9, 9);
  auto random_element = [&](const Integer& a) {
    return QuarticAlgebraElement(a, Rational(coeff(rng), 1 + std::abs(coeff(rng))), coeff(rng), coeff(rng), coeff(rng));
  };
  for (int trial = 0; trial < 200; ++trial) {
    const Integer a = 1 + std::abs(coeff(rng));
    const auto x = random_element(a), y = random_element(a), z = random_element(a);
    CHECK(x.conjugate().conjugate() == x);
    CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
    CHECK((x + y).conjugate() == x.conjugate() + y.conjugate());
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * y == y * x);
  }
  const QuarticAlgebraElement w(5, 0, 0, 1), r2(5, 0, 1);
  CHECK(w * w == QuarticAlgebraElement(5, -5));
  CHECK(r2 * r2 == QuarticAlgebraElement(5, 2));
  CHECK_THROWS_AS(w * QuarticAlgebraElement(3, 1), PreconditionError);
}

TEST_CASE("minimal_primitive_sublattice") {
  const K3Run& run = default_run();
  REQUIRE(run.period.has_value());
  const SublatticeEmbedding tr = minimal_primitive_sublattice(*run.period, run.lattices.t);
  CHECK(tr.rank() == 3);
  CHECK(same_row_lattice(tr.basis(), run.lattices.t.basis()));
  CHECK(is_primitive(tr));

  const GramLattice zero3(IntMatrix::Zero(3, 3));
  PeriodPoint rational_point{2, {QuarticAlgebraElement(2, 2), QuarticAlgebraElement(2, 4), QuarticAlgebraElement(2, -6)}};
  const SublatticeEmbedding line = minimal_primitive_sublattice(rational_point, zero3);
  CHECK(line.rank() == 1);
  CHECK(same_row_lattice(line.basis(), int_matrix({{1, 2, -3}})));

  PeriodPoint mixed{2, {QuarticAlgebraElement(2, 0, 1), QuarticAlgebraElement(2, 0), QuarticAlgebraElement(2, 1)}};
  const SublatticeEmbedding plane = minimal_primitive_sublattice(mixed, zero3);
  CHECK(plane.rank() == 2);
  CHECK(same_row_lattice(plane.basis(), int_matrix({{1, 0, 0}, {0, 0, 1}})));

  // The components of σ lie in the span of the result.
  const SublatticeEmbedding t2 = minimal_primitive_sublattice(*run.period, run.lattices.t.induced());
  CHECK(t2.rank() == 3);
  CHECK(is_primitive(t2));
}

TEST_CASE("torelli_certificate") {
  const K3Run& run = default_run();
  const K3Lattices& lat = run.lattices;
  for (const auto& big : run.extended) {
    const TorelliCertificate c = torelli_certificate(big, *run.period, lat.t, lat.e0);
    CHECK(c.identity_on_t);
    CHECK(c.fixes_e0);
    CHECK(c.fixes_period);
  }
  const LatticeIsometry id = verify_isometry(identity(22), lat.lambda);
  CHECK(torelli_certificate(id, *run.period, lat.t, lat.e0).pass());
  const LatticeIsometry minus = verify_isometry(IntMatrix(-identity(22)), lat.lambda);
  const TorelliCertificate c = torelli_certificate(minus, *run.period, lat.t, lat.e0);
  CHECK_FALSE(c.fixes_e0);
  CHECK_FALSE(c.identity_on_t);
  CHECK_FALSE(c.pass());
  CHECK(c.witness.has_value());
}

TEST_CASE("alpha_map and group_rank_via_alpha") {
  const K3Run& run = default_run();
  const K3Lattices& lat = run.lattices;
  const Integer m = determinant(lat.nbar.induced().gram());
  const LatticeIsometry id = verify_isometry(identity(22), lat.lambda);
  CHECK(alpha_map(id, lat).isZero());
  for (std::size_t i = 0; i < run.extended.size(); ++i) {
    const IntVector expected = Integer(run.report.extension_orders[i]) * m * IntVector::Unit(18, static_cast<Index>(i));
    CHECK(alpha_map(run.extended[i], lat) == expected);
  }
  CHECK(group_rank_via_alpha(run.extended, lat) == 18);
  CHECK(group_rank_via_alpha({}, lat) == 0);
  const LatticeIsometry sq = verify_isometry(matrix_power(run.extended[0].matrix(), 2), lat.lambda);
  CHECK(group_rank_via_alpha({run.extended[0], sq}, lat) == 1);
  CHECK(run.report.group_rank == Index(18));
  const LatticeIsometry minus = verify_isometry(IntMatrix(-identity(22)), lat.lambda);
  CHECK_THROWS_AS(alpha_map(minus, lat), ShapeViolationError);
}

TEST_CASE("alpha_map is a homomorphism on random words") {
  const K3Run& run = default_run();
  const K3Lattices& lat = run.lattices;
  std::mt19937_64 rng(gen::seed(2024));
  std::uniform_int_distribution<std::size_t> pick(0, run.extended.size() - 1);
  std::uniform_int_distribution<int> len(1, 3);
  std::vector<IntMatrix> inverses;
  for (const auto& g : run.extended) inverses.push_back(to_integer(inverse(to_rational(g.matrix()))));
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix word = identity(22);
    IntVector expected = IntVector::Zero(18);
    const int n = len(rng);
    for (int k = 0; k < n; ++k) {
      const std::size_t i = pick(rng);
      const bool inv = rng() % 2 == 0;
      word = word * (inv ? inverses[i] : run.extended[i].matrix());
      const IntVector a = alpha_map(run.extended[i], lat);
      expected += inv ? IntVector(-a) : a;
    }
    CHECK(alpha_map(verify_isometry(word, lat.lambda), lat) == expected);
  }
}

TEST_CASE("restrictions to N have parabolic rank 18") {
  const K3Run& run = default_run();
  std::vector<LatticeIsometry> on_n;
  for (const auto& g : run.extended) on_n.push_back(restrict_to_sublattice(g, run.lattices.n));
  const GramLattice n = run.lattices.n.induced();
  CHECK(parabolic_group_rank(on_n, n) == 18);
  CHECK(parabolic_group_rank(on_n, n) <= n.rank() - 1);
}

TEST_CASE("run_k3 report") {
  const K3Run& run = default_run();
  CHECK(run.report.all_pass());
  CHECK(run.report.extension_orders.size() == 18);
  const K3Run skipped = run_k3(default_primes(), true);
  CHECK(skipped.extended.empty());
  CHECK(skipped.report.all_pass());
  CHECK_FALSE(skipped.report.group_rank.has_value());
}
