#include <catch2/catch_amalgamated.hpp>

#include "exlorentz/verification.hpp"

using namespace exlorentz;

TEST_CASE("commutator rule tables are complete") {
  CHECK(jkg_commutator_rules().size() == 45);
  CHECK(ladder_commutator_rules().size() == 45);
}

TEST_CASE("sample commutators as matrices") {
  auto ms = MatrixSet::build(HalfInteger::from_twice(1));
  // [Gamma0, K_1] = -i Gamma^1
  CHECK(commutator(ms[Gen::Gamma0], ms[Gen::K1]) ==
        ComplexScalar::i_times({-1, 1}) * ms[Gen::Gamma1]);
  // [J_1, J_2] = i J_3 at spin 1
  auto ms1 = MatrixSet::build(HalfInteger(1));
  CHECK(commutator(ms1[Gen::Jx], ms1[Gen::Jy]) == ComplexScalar::i() * ms1[Gen::Jz]);
}

TEST_CASE("both commutator tables hold exactly for small lambda") {
  for (int t : {0, 1, 2}) {
    auto ms = MatrixSet::build(HalfInteger::from_twice(t));
    auto rep = commutator_table_check(ms);
    CHECK(rep.checks.size() == 90);
    for (const auto& c : rep.checks) {
      INFO("lambda " << t << "/2: " << c.name);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("casimir operator") {
  // 2 Lambda (Lambda + 2): 5/2 at spin 1/2, 6 at spin 1, 0 at spin 0.
  for (int t : {0, 1, 2}) {
    auto ms = MatrixSet::build(HalfInteger::from_twice(t));
    auto rep = casimir_check(ms);
    for (const auto& c : rep.checks) {
      INFO("lambda " << t << "/2: " << c.name);
      CHECK(c.pass);
    }
  }
  auto basis = build_labeled_basis(HalfInteger::from_twice(1));
  CHECK(generator_matrix(basis, Gen::Casimir) ==
        ComplexScalar(Rational(5, 2)) * ExactMatrix::identity(4));
  CHECK(generator_matrix(build_labeled_basis(HalfInteger(1)), Gen::Casimir) ==
        ComplexScalar(6) * ExactMatrix::identity(10));
  CHECK(generator_matrix(build_labeled_basis(HalfInteger(0)), Gen::Casimir).is_zero());
}

TEST_CASE("structure constants") {
  const StructureConstants& f = structure_constants();
  // [J1, J2] = i J3
  CHECK(f(0, 1, 2) == ComplexScalar::i());
  // [Gamma0, J_k] = 0
  for (int k = 0; k < 3; ++k)
    for (int c = 0; c < 10; ++c) CHECK(f(6, k, c).is_zero());
  // [K1, K2] = -i J3
  CHECK(f(3, 4, 2) == ComplexScalar::i_times({-1, 1}));
  // Antisymmetry.
  for (int a = 0; a < 10; ++a)
    for (int b = 0; b < 10; ++b)
      for (int c = 0; c < 10; ++c) CHECK(f(a, b, c) == -f(b, a, c));
  CHECK(f.jacobi_holds());
}

TEST_CASE("group metric from the adjoint representation") {
  ExactMatrix eta = group_metric();
  REQUIRE(eta.size() == 10);
  // eta_JJ = -6 delta, eta_KK = +6 delta.
  for (int k = 0; k < 3; ++k) {
    CHECK(eta(k, k) == ComplexScalar(-6));
    CHECK(eta(3 + k, 3 + k) == ComplexScalar(6));
  }
  // The Gamma block is six times a Minkowski metric.  The sign convention
  // is fixed by the commutators themselves: Gamma0 generates compact
  // rotations in the (Gamma_k, K_k) planes, so its diagonal entry comes out
  // negative and the spatial Gammas positive, +6 diag(-1, 1, 1, 1).
  CHECK(eta(6, 6) == ComplexScalar(-6));
  for (int k = 0; k < 3; ++k) CHECK(eta(7 + k, 7 + k) == ComplexScalar(6));
  // Everything off the block diagonals vanishes.
  for (int a = 0; a < 10; ++a)
    for (int b = 0; b < 10; ++b)
      if (a != b) CHECK(eta(a, b).is_zero());
  // Symmetric by construction.
  CHECK(eta == eta.transpose());
}

TEST_CASE("ladder and vector tables are mutually consistent") {
  auto rep = abstract_algebra_check();
  for (const auto& c : rep.checks) {
    INFO(c.name << " " << c.detail);
    CHECK(c.pass);
  }
}

TEST_CASE("bar symmetry as matrix conjugation") {
  for (int t : {0, 1, 2}) {
    auto ms = MatrixSet::build(HalfInteger::from_twice(t));
    auto rep = bar_symmetry_check(ms);
    for (const auto& c : rep.checks) {
      INFO("lambda " << t << "/2: " << c.name);
      CHECK(c.pass);
    }
  }
  // The Gamma0 spectrum is symmetric under negation: the gamma labels come
  // in +-pairs.
  auto basis = build_labeled_basis(HalfInteger(1));
  std::map<int, int> gamma_count;
  for (const auto& [label, poly] : basis.states) gamma_count[label.gamma.twice]++;
  for (const auto& [g, n] : gamma_count) CHECK(gamma_count.at(-g) == n);
}

TEST_CASE("full verification has no hard failures through lambda 2") {
  for (int t = 0; t <= 4; ++t) {
    auto rep = run_full_verification(HalfInteger::from_twice(t));
    INFO("lambda " << t << "/2");
    CHECK(rep.all_hard_pass());
  }
}
