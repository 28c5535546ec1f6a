#pragma once

#include <algorithm>
#include <cstdio>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "exlorentz/golden.hpp"
#include "exlorentz/structure_constants.hpp"

namespace exlorentz {

/// One verification record.  Checks whose name starts with "soft:" report
/// known documented deviations (printed-table scale factors, the DeltaJ
/// coefficient claim) and never make a run fatal.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string deviation;  // "0" for exact agreement, else an exact scalar or a float magnitude
  std::string detail;
};

struct VerificationReport {
  HalfInteger lambda;
  std::vector<CheckResult> checks;

  void add(std::string name, bool pass, std::string deviation = "0",
           std::string detail = "") {
    checks.push_back({std::move(name), pass, std::move(deviation), std::move(detail)});
  }

  void append(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }

  static bool is_soft(const CheckResult& c) { return c.name.rfind("soft:", 0) == 0; }

  bool all_hard_pass() const {
    for (const auto& c : checks)
      if (!c.pass && !is_soft(c)) return false;
    return true;
  }

  std::size_t hard_failure_count() const {
    std::size_t n = 0;
    for (const auto& c : checks)
      if (!c.pass && !is_soft(c)) ++n;
    return n;
  }
};

/// The generator matrices one verification pass works with.
struct MatrixSet {
  LabeledBasis basis;
  std::map<Gen, ExactMatrix> mats;
  ExactMatrix g;

  const ExactMatrix& operator[](Gen gen) const { return mats.at(gen); }

  static MatrixSet build(HalfInteger lambda, int lambda_cap = kDefaultLambdaCap) {
    MatrixSet s;
    s.basis = build_labeled_basis(lambda, lambda_cap);
    for (Gen g : kAllGenerators) s.mats.emplace(g, generator_matrix(s.basis, g));
    s.g = spinor_metric_matrix(s.basis);
    return s;
  }
};

namespace detail {

inline std::string float_magnitude(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

inline void check_matrix_equal(VerificationReport& rep, const std::string& name,
                               const ExactMatrix& actual, const ExactMatrix& expected,
                               const std::string& detail = "") {
  ExactMatrix diff = actual - expected;
  if (diff.is_zero())
    rep.add(name, true, "0", detail);
  else
    rep.add(name, false, float_magnitude(diff.max_abs()), detail);
}

inline ExactMatrix rhs_matrix(const exlorentz::MatrixSet& ms,
                              const std::vector<std::pair<ComplexScalar, Gen>>& rhs,
                              std::size_t n) {
  ExactMatrix out(n);
  for (const auto& [c, g] : rhs) out = out + c * ms[g];
  return out;
}

}  // namespace detail

/// Counting identity: the closed cubic formula, the multiplet sum
/// sum_J (2J+1)^2 and the monomial count C(2 Lambda + 3, 3) must agree.
inline VerificationReport counting_check(HalfInteger lambda) {
  VerificationReport rep;
  rep.lambda = lambda;
  long long formula = state_count(lambda);
  long long sum = 0;
  for (HalfInteger j = j_min(lambda); j <= lambda; j = j + HalfInteger(1)) {
    long long d = j.twice + 1;
    sum += d * d;
  }
  long long t = lambda.twice;
  long long binom = (t + 1) * (t + 2) * (t + 3) / 6;
  bool ok = formula == sum && formula == binom;
  rep.add("counting/N=" + std::to_string(formula), ok, ok ? "0" : "1",
          "formula=" + std::to_string(formula) + " multiplet-sum=" + std::to_string(sum) +
              " binomial=" + std::to_string(binom));
  return rep;
}

/// Orthonormality, eigenvalue labels, hermiticity patterns, metric
/// relations and pseudo-hermiticity for one Lambda.
inline VerificationReport basis_checks(const MatrixSet& ms) {
  VerificationReport rep;
  rep.lambda = ms.basis.lambda;
  const std::size_t n = ms.basis.dimension();

  bool orth = true;
  for (std::size_t i = 0; i < n && orth; ++i)
    for (std::size_t j = 0; j < n && orth; ++j) {
      ComplexScalar ip = inner_product(ms.basis.states[i].second, ms.basis.states[j].second);
      ComplexScalar want = (i == j) ? ComplexScalar(1) : ComplexScalar();
      if (!(ip == want)) orth = false;
    }
  rep.add("basis/orthonormal", orth);
  rep.add("basis/complete",
          static_cast<long long>(n) == state_count(ms.basis.lambda),
          "0", "orthonormal count equals the monomial-space dimension");

  // Diagonal eigenvalue relations, checked at the polynomial level.
  bool eigen_ok = true;
  std::string eigen_detail;
  for (const auto& [label, psi] : ms.basis.states) {
    auto expect_scaled = [&](Gen g, const Rational& eig) {
      SpinorPolynomial lhs = apply_generator(g, psi);
      SpinorPolynomial rhs = ComplexScalar(RadicalScalar(eig)) * psi;
      if (!(lhs == rhs)) {
        eigen_ok = false;
        if (eigen_detail.empty())
          eigen_detail = std::string(gen_name(g)) + " eigenvalue failed on " + to_string(label);
      }
    };
    expect_scaled(Gen::Jz, Rational(label.m.twice, 2));
    expect_scaled(Gen::Gamma0, Rational(label.gamma.twice, 2));
    // J^2 = (J+ J- + J- J+)/2 + Jz^2 applied as operators.
    {
      SpinorPolynomial jp = apply_generator(Gen::Jplus, psi);
      SpinorPolynomial jm = apply_generator(Gen::Jminus, psi);
      SpinorPolynomial jsq =
          ComplexScalar(Rational(1, 2)) *
              (apply_generator(Gen::Jminus, jp) + apply_generator(Gen::Jplus, jm)) +
          apply_generator(Gen::Jz, apply_generator(Gen::Jz, psi));
      Rational eig(static_cast<std::int64_t>(label.j.twice) * (label.j.twice + 2), 4);
      if (!(jsq == ComplexScalar(RadicalScalar(eig)) * psi)) {
        eigen_ok = false;
        if (eigen_detail.empty()) eigen_detail = "J^2 eigenvalue failed on " + to_string(label);
      }
    }
    expect_scaled(Gen::Casimir,
                  Rational(static_cast<std::int64_t>(ms.basis.lambda.twice) *
                               (ms.basis.lambda.twice + 4),
                           2));
  }
  rep.add("basis/eigenvalue-labels", eigen_ok, eigen_ok ? "0" : "1", eigen_detail);

  // Hermiticity pattern: J and Gamma0 hermitian, K and Gamma_k antihermitian.
  for (Gen g : {Gen::Jx, Gen::Jy, Gen::Jz, Gen::Gamma0})
    detail::check_matrix_equal(rep, std::string("hermitian/") + gen_name(g),
                               ms[g].adjoint(), ms[g]);
  for (Gen g : {Gen::K1, Gen::K2, Gen::K3, Gen::Gamma1, Gen::Gamma2, Gen::Gamma3})
    detail::check_matrix_equal(rep, std::string("antihermitian/") + gen_name(g),
                               ms[g].adjoint(), -ms[g]);

  // Metric relations.
  for (Gen g : {Gen::Gamma0, Gen::Jx, Gen::Jy, Gen::Jz})
    detail::check_matrix_equal(rep, std::string("metric/commutes/") + gen_name(g),
                               ms.g * ms[g], ms[g] * ms.g);
  for (Gen g : {Gen::Gamma1, Gen::Gamma2, Gen::Gamma3, Gen::K1, Gen::K2, Gen::K3,
                Gen::DeltaJP, Gen::DeltaJM})
    detail::check_matrix_equal(rep, std::string("metric/anticommutes/") + gen_name(g),
                               ms.g * ms[g], -(ms[g] * ms.g));

  // Pseudo-hermiticity g Gamma^mu^dag g = Gamma^mu, the algebraic source of
  // the conserved current.
  for (Gen g : {Gen::Gamma0, Gen::Gamma1, Gen::Gamma2, Gen::Gamma3})
    detail::check_matrix_equal(rep, std::string("pseudo-hermitian/") + gen_name(g),
                               ms.g * ms[g].adjoint() * ms.g, ms[g]);
  return rep;
}

/// Both commutator tables as exact matrix identities: the 45 J/K/Gamma
/// pairs and the 45 expanded raising/lowering relations.
inline VerificationReport commutator_table_check(const MatrixSet& ms) {
  VerificationReport rep;
  rep.lambda = ms.basis.lambda;
  const std::size_t n = ms.basis.dimension();
  for (const CommutatorRule& r : jkg_commutator_rules()) {
    ExactMatrix lhs = commutator(ms[kAlgebraBasis[r.a]], ms[kAlgebraBasis[r.b]]);
    ExactMatrix rhs(n);
    for (const auto& [c, idx] : r.rhs) rhs = rhs + c * ms[kAlgebraBasis[idx]];
    detail::check_matrix_equal(rep, "commutator/" + r.name, lhs, rhs);
  }
  for (const LadderRule& r : ladder_commutator_rules()) {
    ExactMatrix lhs = commutator(ms[r.a], ms[r.b]);
    detail::check_matrix_equal(rep, "ladder/" + r.name, lhs,
                               detail::rhs_matrix(ms, r.rhs, n));
  }
  return rep;
}

/// C = J.J - K.K + Gamma0^2 - Gamma.Gamma built from matrices must equal
/// 2 Lambda (Lambda + 2) times the identity and commute with all ten
/// generators; the operator-level Casimir matrix must coincide.
inline VerificationReport casimir_check(const MatrixSet& ms) {
  VerificationReport rep;
  rep.lambda = ms.basis.lambda;
  const std::size_t n = ms.basis.dimension();
  ExactMatrix c(n);
  for (Gen g : {Gen::Jx, Gen::Jy, Gen::Jz, Gen::Gamma0}) c = c + ms[g] * ms[g];
  for (Gen g : {Gen::K1, Gen::K2, Gen::K3, Gen::Gamma1, Gen::Gamma2, Gen::Gamma3})
    c = c - ms[g] * ms[g];
  Rational eig(static_cast<std::int64_t>(ms.basis.lambda.twice) *
                   (ms.basis.lambda.twice + 4),
               2);
  detail::check_matrix_equal(rep, "casimir/value=" + to_string(Rational(eig)), c,
                             ComplexScalar(RadicalScalar(eig)) * ExactMatrix::identity(n));
  detail::check_matrix_equal(rep, "casimir/operator-route", ms[Gen::Casimir], c);
  for (int a = 0; a < 10; ++a)
    detail::check_matrix_equal(
        rep, std::string("casimir/commutes/") + algebra_basis_name(a),
        commutator(c, ms[kAlgebraBasis[a]]), ExactMatrix(n));
  return rep;
}

/// P = bar involution: P^2 = 1, P J P = J, P K P = K, P Gamma^mu P = -Gamma^mu.
inline VerificationReport bar_symmetry_check(const MatrixSet& ms) {
  VerificationReport rep;
  rep.lambda = ms.basis.lambda;
  const std::size_t n = ms.basis.dimension();
  ExactMatrix p = bar_involution_matrix(ms.basis);
  detail::check_matrix_equal(rep, "bar/P^2=1", p * p, ExactMatrix::identity(n));
  for (Gen g : {Gen::Jx, Gen::Jy, Gen::Jz, Gen::K1, Gen::K2, Gen::K3})
    detail::check_matrix_equal(rep, std::string("bar/fixes/") + gen_name(g),
                               p * ms[g] * p, ms[g]);
  for (Gen g : {Gen::Gamma0, Gen::Gamma1, Gen::Gamma2, Gen::Gamma3})
    detail::check_matrix_equal(rep, std::string("bar/negates/") + gen_name(g),
                               p * ms[g] * p, -ms[g]);
  return rep;
}

/// Audits the tabulated operator actions state by state.  J^2, Jz, Gamma0
/// and the J+- ladder coefficients must match exactly.  For DeltaJ+- the
/// ladder structure (each image a multiple of a single labeled state) is a
/// hard requirement, while the claimed coefficient (+-)(Lambda+1)(J -+ gamma)
/// is compared softly: the construction's normalization makes the measured
/// values differ, and the report records both plus their exact ratio.
inline VerificationReport verify_action_table(const LabeledBasis& basis) {
  VerificationReport rep;
  rep.lambda = basis.lambda;

  bool jladder_ok = true;
  std::string jladder_detail;
  for (const auto& [label, psi] : basis.states) {
    for (int dir = 0; dir < 2; ++dir) {
      Gen g = dir == 0 ? Gen::Jplus : Gen::Jminus;
      SpinorPolynomial image = apply_generator(g, psi);
      HalfInteger m2 = dir == 0 ? label.m + HalfInteger(1) : label.m - HalfInteger(1);
      if (m2.twice > label.j.twice || m2.twice < -label.j.twice) {
        if (!image.is_zero()) {
          jladder_ok = false;
          jladder_detail = std::string(gen_name(g)) + " did not annihilate " + to_string(label);
        }
        continue;
      }
      // sqrt((J +- M + 1)(J -+ M)) at the source M.
      std::int64_t a = dir == 0 ? (label.j.twice + label.m.twice + 2)
                                : (label.j.twice - label.m.twice + 2);
      std::int64_t b = dir == 0 ? (label.j.twice - label.m.twice)
                                : (label.j.twice + label.m.twice);
      RadicalScalar coeff = RadicalScalar::sqrt_of(Rational(a * b, 4));
      int idx = basis.index_of({label.lambda, label.j, label.gamma, m2});
      SpinorPolynomial expected = ComplexScalar(coeff) * basis.states[idx].second;
      if (!(image == expected)) {
        jladder_ok = false;
        if (jladder_detail.empty())
          jladder_detail = std::string(gen_name(g)) + " coefficient wrong on " + to_string(label);
      }
    }
  }
  rep.add("action/J-ladder-coefficients", jladder_ok, jladder_ok ? "0" : "1", jladder_detail);

  for (int dir = 0; dir < 2; ++dir) {
    Gen g = dir == 0 ? Gen::DeltaJP : Gen::DeltaJM;
    int step = dir == 0 ? 1 : -1;
    bool structure_ok = true;
    for (const auto& [label, psi] : basis.states) {
      SpinorPolynomial image = apply_generator(g, psi);
      HalfInteger gamma2 = HalfInteger::from_twice(label.gamma.twice + 2 * step);
      int idx = basis.index_of({label.lambda, label.j, gamma2, label.m});
      // Claimed coefficient (+-)(Lambda+1)[J -+ gamma] at the source gamma.
      Rational claimed(static_cast<std::int64_t>(step) * (basis.lambda.twice + 2) *
                           (dir == 0 ? label.j.twice - label.gamma.twice
                                     : label.j.twice + label.gamma.twice),
                       4);
      if (idx < 0) {
        if (!image.is_zero()) {
          structure_ok = false;
          throw NonProportional(std::string(gen_name(g)) + " leaves the multiplet from " +
                                to_string(label));
        }
        continue;
      }
      const SpinorPolynomial& target = basis.states[idx].second;
      ComplexScalar measured = inner_product(target, image);
      if (!(image - measured * target).is_zero())
        throw NonProportional(std::string(gen_name(g)) + " image of " + to_string(label) +
                              " is not proportional to a single labeled state");
      ComplexScalar claim = ComplexScalar(RadicalScalar(claimed));
      std::string ratio = "n/a";
      if (!claimed.is_zero())
        ratio = to_string(measured * ComplexScalar(RadicalScalar(Rational(1) / claimed)));
      rep.add("soft:action/" + std::string(gen_name(g)) + "/" + to_string(label),
              measured == claim, measured == claim ? "0" : ratio,
              "measured=" + to_string(measured) + " claimed=" + to_string(Rational(claimed)) +
                  " ratio=" + ratio);
    }
    rep.add(std::string("action/ladder-structure/") + gen_name(g), structure_ok);
  }
  return rep;
}

/// Lambda-independent abstract-algebra checks: Jacobi identity, the group
/// metric blocks, and mutual consistency of the two commutator tables.
inline VerificationReport abstract_algebra_check() {
  VerificationReport rep;
  rep.lambda = HalfInteger(0);
  const StructureConstants& f = structure_constants();
  rep.add("structure/jacobi", f.jacobi_holds());

  ExactMatrix eta = group_metric();
  // eta_JJ = -6 delta, eta_KK = +6 delta, eta_{Gamma mu, Gamma nu} is six
  // times a Minkowski metric (signature -+++ in the J1..Gamma3 order fixed
  // by the commutation relations themselves), all cross blocks zero.
  ExactMatrix expected(10);
  const ComplexScalar six(6), msix(-6);
  for (int k = 0; k < 3; ++k) {
    expected(k, k) = msix;
    expected(3 + k, 3 + k) = six;
    expected(7 + k, 7 + k) = six;
  }
  expected(6, 6) = msix;
  detail::check_matrix_equal(rep, "structure/group-metric", eta, expected,
                             "diag(-6,-6,-6, 6,6,6, -6, 6,6,6)");

  // Expanding the ladder generators in the J/K/Gamma basis and commuting
  // through the structure constants must reproduce every ladder relation.
  auto expand = [](Gen g) {
    std::array<ComplexScalar, 10> v{};
    const ComplexScalar I = ComplexScalar::i();
    const ComplexScalar one(1);
    switch (g) {
      case Gen::Jz: v[2] = one; break;
      case Gen::Jplus: v[0] = one; v[1] = I; break;
      case Gen::Jminus: v[0] = one; v[1] = -I; break;
      case Gen::Gamma0: v[6] = one; break;
      case Gen::DeltaZP: v[9] = one; v[5] = I; break;
      case Gen::DeltaZM: v[9] = one; v[5] = -I; break;
      case Gen::DeltaPP: v[7] = one; v[8] = I; v[3] = I; v[4] = ComplexScalar(-1); break;
      case Gen::DeltaMP: v[7] = one; v[8] = -I; v[3] = I; v[4] = one; break;
      case Gen::DeltaPM: v[7] = one; v[8] = I; v[3] = -I; v[4] = one; break;
      case Gen::DeltaMM: v[7] = one; v[8] = -I; v[3] = -I; v[4] = ComplexScalar(-1); break;
      default: throw Error("no expansion");
    }
    return v;
  };
  bool tables_consistent = true;
  std::string first_bad;
  for (const LadderRule& r : ladder_commutator_rules()) {
    auto va = expand(r.a);
    auto vb = expand(r.b);
    std::array<ComplexScalar, 10> lhs{};
    for (int a = 0; a < 10; ++a) {
      if (va[a].is_zero()) continue;
      for (int b = 0; b < 10; ++b) {
        if (vb[b].is_zero()) continue;
        for (int c = 0; c < 10; ++c) lhs[c] += va[a] * vb[b] * f(a, b, c);
      }
    }
    std::array<ComplexScalar, 10> rhs{};
    for (const auto& [coeff, gen] : r.rhs) {
      auto vg = expand(gen);
      for (int c = 0; c < 10; ++c) rhs[c] += coeff * vg[c];
    }
    for (int c = 0; c < 10; ++c)
      if (!(lhs[c] == rhs[c])) {
        tables_consistent = false;
        if (first_bad.empty()) first_bad = r.name;
      }
  }
  rep.add("structure/tables-consistent", tables_consistent,
          tables_consistent ? "0" : "1", first_bad);
  return rep;
}

/// Compare generated matrices and states against the reference tables.
/// Everything is a hard exact check except the spin-1 Delta displays,
/// whose entries disagree with the normalized states by block scale
/// factors; those are checked for sparsity pattern (hard) and reported
/// entry by entry as soft ratio records.
inline VerificationReport golden_check(const MatrixSet& ms) {
  VerificationReport rep;
  rep.lambda = ms.basis.lambda;

  if (ms.basis.lambda.twice == 1) {
    static const std::map<std::string, Gen> direct = {
        {"Gamma0", Gen::Gamma0}, {"Gamma1", Gen::Gamma1}, {"Gamma2", Gen::Gamma2},
        {"Gamma3", Gen::Gamma3}, {"J1", Gen::Jx},         {"J2", Gen::Jy},
        {"J3", Gen::Jz},         {"K1", Gen::K1},         {"K2", Gen::K2},
        {"K3", Gen::K3},         {"DeltaZ+", Gen::DeltaZP}, {"DeltaZ-", Gen::DeltaZM}};
    const ComplexScalar half(Rational(1, 2));
    const ComplexScalar mihalf = ComplexScalar::i_times({-1, 2});
    for (const auto& [name, table] : golden::half_matrices()) {
      ExactMatrix actual;
      if (auto it = direct.find(name); it != direct.end()) {
        actual = ms[it->second];
      } else if (name == "DeltaX+") {
        actual = half * (ms[Gen::DeltaPP] + ms[Gen::DeltaMP]);
      } else if (name == "DeltaX-") {
        actual = half * (ms[Gen::DeltaPM] + ms[Gen::DeltaMM]);
      } else if (name == "DeltaY+") {
        actual = mihalf * (ms[Gen::DeltaPP] - ms[Gen::DeltaMP]);
      } else if (name == "DeltaY-") {
        actual = mihalf * (ms[Gen::DeltaPM] - ms[Gen::DeltaMM]);
      } else {
        continue;
      }
      detail::check_matrix_equal(rep, "golden/spin-1/2/" + name, actual, table);
    }
  }

  if (ms.basis.lambda.twice == 2) {
    const auto& want = golden::spin1_states();
    bool states_ok = ms.basis.dimension() == want.size();
    std::string state_detail;
    for (std::size_t i = 0; states_ok && i < want.size(); ++i) {
      if (!(ms.basis.states[i].first == want[i].first) ||
          !(ms.basis.states[i].second == want[i].second)) {
        states_ok = false;
        state_detail = "state " + std::to_string(i) + " (" +
                       to_string(want[i].first) + ") differs";
      }
    }
    rep.add("golden/spin-1/states", states_ok, states_ok ? "0" : "1", state_detail);

    static const std::map<std::string, Gen> direct = {{"Gamma0", Gen::Gamma0},
                                                      {"Jz", Gen::Jz},
                                                      {"Jplus", Gen::Jplus},
                                                      {"Jminus", Gen::Jminus}};
    for (const auto& [name, table] : golden::spin1_matrices()) {
      ExactMatrix actual = name == "g" ? ms.g : ms[direct.at(name)];
      detail::check_matrix_equal(rep, "golden/spin-1/" + name, actual, table);
    }

    static const std::map<std::string, Gen> deltas = {
        {"DeltaZ+", Gen::DeltaZP},   {"DeltaZ-", Gen::DeltaZM},
        {"DeltaPlus+", Gen::DeltaPP}, {"DeltaPlus-", Gen::DeltaPM},
        {"DeltaMinus+", Gen::DeltaMP}, {"DeltaMinus-", Gen::DeltaMM}};
    for (const auto& [name, display] : golden::spin1_delta_displays()) {
      const ExactMatrix& actual = ms[deltas.at(name)];
      bool pattern_ok = true;
      bool all_ratios_one = true;
      std::string ratios;
      for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 10; ++j) {
          bool dz = display(i, j).is_zero();
          bool az = actual(i, j).is_zero();
          if (dz != az) pattern_ok = false;
          if (!dz && !az) {
            ComplexScalar ratio = actual(i, j) * display(i, j).inverse();
            if (!(ratio == ComplexScalar(1))) all_ratios_one = false;
            if (!ratios.empty()) ratios += ", ";
            ratios += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                      ")=" + to_string(ratio);
          }
        }
      rep.add("golden/spin-1/delta-pattern/" + name, pattern_ok);
      rep.add("soft:golden/spin-1/delta-scale/" + name, all_ratios_one,
              all_ratios_one ? "0" : "entry ratios generated/printed: " + ratios,
              "printed display and normalized states disagree by block scale factors");
    }
  }
  return rep;
}

/// Everything at once; the report is deterministic in order and content.
inline VerificationReport run_full_verification(HalfInteger lambda,
                                                int lambda_cap = kDefaultLambdaCap) {
  MatrixSet ms = MatrixSet::build(lambda, lambda_cap);
  VerificationReport rep;
  rep.lambda = lambda;
  rep.append(counting_check(lambda));
  rep.append(basis_checks(ms));
  rep.append(verify_action_table(ms.basis));
  rep.append(commutator_table_check(ms));
  rep.append(casimir_check(ms));
  rep.append(bar_symmetry_check(ms));
  rep.append(golden_check(ms));
  rep.append(abstract_algebra_check());
  return rep;
}

/// Plain-text table, one row per check.
inline std::string summary_table(const VerificationReport& rep) {
  std::string out = "lambda = " + to_string(rep.lambda) + "\n";
  std::size_t width = 4;
  for (const auto& c : rep.checks) width = std::max(width, c.name.size());
  for (const auto& c : rep.checks) {
    std::string status = c.pass ? "pass" : (VerificationReport::is_soft(c) ? "SOFT" : "FAIL");
    out += status + "  " + c.name;
    out.append(width - c.name.size() + 2, ' ');
    out += "deviation=" + c.deviation;
    if (!c.detail.empty()) out += "  [" + c.detail + "]";
    out += "\n";
  }
  out += rep.all_hard_pass() ? "all hard checks passed\n"
                             : std::to_string(rep.hard_failure_count()) + " hard failure(s)\n";
  return out;
}

}  // namespace exlorentz
