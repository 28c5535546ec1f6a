#include <catch2/catch_amalgamated.hpp>

#include <thread>

#include "exlorentz/golden.hpp"
#include "exlorentz/verification.hpp"

using namespace exlorentz;

namespace {

SpinorPolynomial mono(int a, int b, int c, int d, ComplexScalar coeff = ComplexScalar(1)) {
  return SpinorPolynomial::monomial(Monomial{{a, b, c, d}}, coeff);
}

const ComplexScalar kRoot2{RadicalScalar::root(2)};

}  // namespace

TEST_CASE("state counting") {
  CHECK(state_count(HalfInteger(0)) == 1);
  CHECK(state_count(HalfInteger::from_twice(1)) == 4);
  CHECK(state_count(HalfInteger(1)) == 10);
  CHECK(state_count(HalfInteger::from_twice(3)) == 20);
  CHECK(state_count(HalfInteger(2)) == 35);

  // The closed formula must agree with an independently computed multiplet
  // sum and with the monomial count, for every Lambda up to 6.
  for (int t = 0; t <= 12; ++t) {
    HalfInteger lambda = HalfInteger::from_twice(t);
    long long sum = 0;
    for (int twice_j = t % 2; twice_j <= t; twice_j += 2)
      sum += static_cast<long long>(twice_j + 1) * (twice_j + 1);
    CHECK(state_count(lambda) == sum);
    CHECK(state_count(lambda) ==
          static_cast<long long>(monomial_basis(lambda).size()));
  }
}

TEST_CASE("seed states") {
  CHECK(seed_state(HalfInteger(1), HalfInteger(1)) == mono(0, 0, 0, 2));
  CHECK(seed_state(HalfInteger(1), HalfInteger(0)) ==
        mono(1, 0, 0, 1) - mono(0, 1, 1, 0));
  CHECK(seed_state(HalfInteger::from_twice(1), HalfInteger::from_twice(1)) ==
        mono(0, 0, 0, 1));
  CHECK_THROWS_AS(seed_state(HalfInteger(1), HalfInteger(2)), InvalidJ);
  CHECK_THROWS_AS(seed_state(HalfInteger(1), HalfInteger::from_twice(1)), InvalidJ);
}

TEST_CASE("spin-1/2 basis is the four bare spinor variables") {
  auto basis = build_labeled_basis(HalfInteger::from_twice(1));
  REQUIRE(basis.dimension() == 4);
  const HalfInteger h = HalfInteger::from_twice(1);
  const HalfInteger mh = HalfInteger::from_twice(-1);
  CHECK(basis.states[0].first == StateLabel{h, h, h, h});
  CHECK(basis.states[0].second == mono(1, 0, 0, 0));
  CHECK(basis.states[1].first == StateLabel{h, h, h, mh});
  CHECK(basis.states[1].second == mono(0, 1, 0, 0));
  CHECK(basis.states[2].first == StateLabel{h, h, mh, h});
  CHECK(basis.states[2].second == mono(0, 0, 1, 0));
  CHECK(basis.states[3].first == StateLabel{h, h, mh, mh});
  CHECK(basis.states[3].second == mono(0, 0, 0, 1));
}

TEST_CASE("spin-1 basis reproduces the reference signed state table") {
  auto basis = build_labeled_basis(HalfInteger(1));
  const auto& want = golden::spin1_states();
  REQUIRE(basis.dimension() == want.size());
  for (std::size_t k = 0; k < want.size(); ++k) {
    INFO("state " << k << " " << to_string(want[k].first));
    CHECK(basis.states[k].first == want[k].first);
    CHECK(basis.states[k].second == want[k].second);
  }
}

TEST_CASE("lambda zero is the trivial representation") {
  auto basis = build_labeled_basis(HalfInteger(0));
  REQUIRE(basis.dimension() == 1);
  CHECK(basis.states[0].first == StateLabel{HalfInteger(0), HalfInteger(0),
                                            HalfInteger(0), HalfInteger(0)});
  CHECK(basis.states[0].second == SpinorPolynomial::one());
  for (Gen g : kAllGenerators)
    CHECK(generator_matrix(basis, g).is_zero());
}

TEST_CASE("orthonormality and eigenvalue labels up to lambda 2") {
  for (int t = 0; t <= 4; ++t) {
    auto ms = MatrixSet::build(HalfInteger::from_twice(t));
    auto rep = basis_checks(ms);
    for (const auto& c : rep.checks) {
      INFO("lambda " << t << "/2: " << c.name << " " << c.detail);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("spinor metric entries") {
  auto diag1 = spinor_metric(build_labeled_basis(HalfInteger(1)));
  std::vector<int> want1 = {-1, 1, 1, 1, -1, -1, -1, 1, 1, 1};
  REQUIRE(diag1.size() == want1.size());
  for (std::size_t k = 0; k < want1.size(); ++k)
    CHECK(diag1[k] == ComplexScalar(want1[k]));

  // g at spin 1/2 equals twice the Gamma0 matrix.
  auto basis = build_labeled_basis(HalfInteger::from_twice(1));
  CHECK(spinor_metric_matrix(basis) ==
        ComplexScalar(2) * generator_matrix(basis, Gen::Gamma0));

  CHECK(spinor_metric(build_labeled_basis(HalfInteger(0)))[0] == ComplexScalar(1));

  // Squares to the identity.
  auto g2 = spinor_metric_matrix(basis) * spinor_metric_matrix(basis);
  CHECK(g2 == ExactMatrix::identity(4));
}

TEST_CASE("action table audit") {
  for (int t : {1, 2, 3, 4}) {
    auto basis = build_labeled_basis(HalfInteger::from_twice(t));
    auto rep = verify_action_table(basis);
    for (const auto& c : rep.checks) {
      if (VerificationReport::is_soft(c)) continue;
      INFO("lambda " << t << "/2: " << c.name << " " << c.detail);
      CHECK(c.pass);
    }
  }

  // At spin 1/2 the claimed DeltaJ coefficient matches the measured one; at
  // spin 1 it does not, and the audit records the exact discrepancy.
  auto soft_failures = [](const VerificationReport& rep) {
    int n = 0;
    for (const auto& c : rep.checks)
      if (VerificationReport::is_soft(c) && !c.pass) ++n;
    return n;
  };
  CHECK(soft_failures(verify_action_table(build_labeled_basis(HalfInteger::from_twice(1)))) == 0);

  auto rep1 = verify_action_table(build_labeled_basis(HalfInteger(1)));
  CHECK(soft_failures(rep1) == 12);
  bool found = false;
  for (const auto& c : rep1.checks)
    if (c.name == "soft:action/DeltaJ+/psi[1,1;-1,-1]") {
      found = true;
      CHECK_FALSE(c.pass);
      // Claimed 4, measured -2 sqrt(2).
      CHECK(c.detail.find("measured=-2*sqrt(2)") != std::string::npos);
      CHECK(c.detail.find("claimed=4") != std::string::npos);
    }
  CHECK(found);
}

TEST_CASE("bar involution matrix") {
  auto basis = build_labeled_basis(HalfInteger::from_twice(1));
  ExactMatrix p = bar_involution_matrix(basis);
  CHECK(p * p == ExactMatrix::identity(4));
  // Swaps the two charge doublets.
  ExactMatrix want(4);
  want(0, 2) = want(2, 0) = want(1, 3) = want(3, 1) = ComplexScalar(1);
  CHECK(p == want);

  for (int t : {1, 2}) {
    auto ms = MatrixSet::build(HalfInteger::from_twice(t));
    ExactMatrix pt = bar_involution_matrix(ms.basis);
    CHECK(pt * ms[Gen::Gamma0] * pt == -ms[Gen::Gamma0]);
    CHECK(pt * ms[Gen::Jz] * pt == ms[Gen::Jz]);
  }

  CHECK(bar_involution_matrix(build_labeled_basis(HalfInteger(0))) ==
        ExactMatrix::identity(1));
}

TEST_CASE("basis construction respects the lambda cap") {
  CHECK_THROWS_AS(build_labeled_basis(HalfInteger(7)), LambdaTooLarge);
  CHECK_THROWS_AS(build_labeled_basis(HalfInteger::from_twice(-2)), InvalidJ);
}

TEST_CASE("independent builds are safe to run concurrently") {
  // Construction is pure: parallel builds of the same system must agree
  // with each other and with a serial build.
  auto reference = build_labeled_basis(HalfInteger::from_twice(3));
  std::vector<LabeledBasis> results(4);
  std::vector<std::thread> workers;
  for (auto& slot : results)
    workers.emplace_back([&slot] { slot = build_labeled_basis(HalfInteger::from_twice(3)); });
  for (auto& w : workers) w.join();
  for (const auto& basis : results) {
    REQUIRE(basis.dimension() == reference.dimension());
    for (std::size_t k = 0; k < basis.dimension(); ++k) {
      CHECK(basis.states[k].first == reference.states[k].first);
      CHECK(basis.states[k].second == reference.states[k].second);
    }
  }
}
