#pragma once

#include <array>
#include <string>
#include <vector>

#include "exlorentz/exact_matrix.hpp"

namespace exlorentz {

/// Index order of the ten algebra generators in every tensor and in the
/// group metric: J1 J2 J3 K1 K2 K3 Gamma0 Gamma1 Gamma2 Gamma3.
inline constexpr std::array<Gen, 10> kAlgebraBasis = {
    Gen::Jx, Gen::Jy, Gen::Jz, Gen::K1,     Gen::K2,
    Gen::K3, Gen::Gamma0,      Gen::Gamma1, Gen::Gamma2, Gen::Gamma3};

inline const char* algebra_basis_name(int a) {
  static const char* names[10] = {"J1", "J2", "J3", "K1",     "K2",
                                  "K3", "Gamma0",   "Gamma1", "Gamma2", "Gamma3"};
  return names[a];
}

/// One row of the commutator table: [G_a, G_b] = sum_k rhs[k].first * G_{rhs[k].second}.
struct CommutatorRule {
  int a = 0;
  int b = 0;
  std::vector<std::pair<ComplexScalar, int>> rhs;
  std::string name;
};

namespace detail {

inline int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

inline std::string rule_name(int a, int b,
                             const std::vector<std::pair<ComplexScalar, int>>& rhs) {
  std::string s = "[" + std::string(algebra_basis_name(a)) + "," + algebra_basis_name(b) + "]=";
  if (rhs.empty()) return s + "0";
  for (std::size_t k = 0; k < rhs.size(); ++k) {
    if (k) s += "+";
    s += "(" + to_string(rhs[k].first) + ")*" + algebra_basis_name(rhs[k].second);
  }
  return s;
}

}  // namespace detail

/// All 45 unordered pairs of the J/K/Gamma commutator table, indices
/// expanded.  Row convention: a < b in kAlgebraBasis order.
inline const std::vector<CommutatorRule>& jkg_commutator_rules() {
  static const std::vector<CommutatorRule> rules = [] {
    std::vector<CommutatorRule> out;
    const ComplexScalar I = ComplexScalar::i();
    auto add = [&](int a, int b, std::vector<std::pair<ComplexScalar, int>> rhs) {
      CommutatorRule r;
      r.a = a;
      r.b = b;
      r.rhs = std::move(rhs);
      r.name = detail::rule_name(a, b, r.rhs);
      out.push_back(std::move(r));
    };
    const int J = 0, K = 3, G0 = 6, G = 7;
    for (int i = 0; i < 3; ++i) {
      // [J_i, J_j] = i eps J_m ; [J_i, K_j] = i eps K_m ; [K_i, K_j] = -i eps J_m
      for (int j = i + 1; j < 3; ++j) {
        int m = 3 - i - j;
        int e = detail::levi_civita(i, j, m);
        add(J + i, J + j, {{ComplexScalar::i_times(Rational(e)), J + m}});
        add(K + i, K + j, {{ComplexScalar::i_times(Rational(-e)), J + m}});
        add(G + i, G + j, {{ComplexScalar::i_times(Rational(-e)), J + m}});
      }
      for (int j = 0; j < 3; ++j) {
        if (i != j) {
          int m = 3 - i - j;
          int e = detail::levi_civita(i, j, m);
          add(J + i, K + j, {{ComplexScalar::i_times(Rational(e)), K + m}});
          // [J_i, Gamma_j] = -[Gamma_j, J_i] = i eps_{ijm} Gamma_m
          add(J + i, G + j, {{ComplexScalar::i_times(Rational(e)), G + m}});
          add(K + i, G + j, {});
        } else {
          add(J + i, K + i, {});
          add(J + i, G + i, {});
          // [K_i, Gamma_i] = -[Gamma_i, K_i] = +i Gamma0
          add(K + i, G + i, {{I, G0}});
        }
      }
      add(J + i, G0, {});
      // [K_i, Gamma0] = -[Gamma0, K_i] = +i Gamma_i
      add(K + i, G0, {{I, G + i}});
      // [Gamma0, Gamma_i] = i K_i
      add(G0, G + i, {{I, K + i}});
    }
    return out;
  }();
  return rules;
}

/// One identity of the raising/lowering form of the table.
struct LadderRule {
  Gen a;
  Gen b;
  std::vector<std::pair<ComplexScalar, Gen>> rhs;
  std::string name;
};

/// The ladder-operator commutator table with every +/- choice expanded
/// (45 identities).
inline const std::vector<LadderRule>& ladder_commutator_rules() {
  static const std::vector<LadderRule> rules = [] {
    std::vector<LadderRule> out;
    auto add = [&](Gen a, Gen b, std::vector<std::pair<ComplexScalar, Gen>> rhs) {
      LadderRule r;
      r.a = a;
      r.b = b;
      r.rhs = std::move(rhs);
      r.name = "[" + std::string(gen_name(a)) + "," + gen_name(b) + "]=";
      if (r.rhs.empty()) {
        r.name += "0";
      } else {
        for (std::size_t k = 0; k < r.rhs.size(); ++k) {
          if (k) r.name += "+";
          r.name += "(" + to_string(r.rhs[k].first) + ")*" + gen_name(r.rhs[k].second);
        }
      }
      out.push_back(std::move(r));
    };
    const Rational one(1), two(2);
    const Gen dz[2] = {Gen::DeltaZP, Gen::DeltaZM};
    const Gen dp[2] = {Gen::DeltaPP, Gen::DeltaPM};  // Delta_+^(s), s = +,-
    const Gen dm[2] = {Gen::DeltaMP, Gen::DeltaMM};  // Delta_-^(s)
    const Rational ssign[2] = {one, -one};

    // [Gamma0, J] = 0
    add(Gen::Gamma0, Gen::Jz, {});
    add(Gen::Gamma0, Gen::Jplus, {});
    add(Gen::Gamma0, Gen::Jminus, {});
    for (int s = 0; s < 2; ++s) {
      // [Gamma0, Delta_k^(s)] = s Delta_k^(s)
      add(Gen::Gamma0, dz[s], {{ssign[s], dz[s]}});
      add(Gen::Gamma0, dp[s], {{ssign[s], dp[s]}});
      add(Gen::Gamma0, dm[s], {{ssign[s], dm[s]}});
    }
    // [Jz, J+-] = +- J+- ; [J+, J-] = 2 Jz
    add(Gen::Jz, Gen::Jplus, {{one, Gen::Jplus}});
    add(Gen::Jz, Gen::Jminus, {{-one, Gen::Jminus}});
    add(Gen::Jplus, Gen::Jminus, {{two, Gen::Jz}});
    for (int s = 0; s < 2; ++s) {
      // [Jz, Delta_z^(s)] = 0 ; [Jz, Delta_+-^(s)] = +- Delta_+-^(s)
      add(Gen::Jz, dz[s], {});
      add(Gen::Jz, dp[s], {{one, dp[s]}});
      add(Gen::Jz, dm[s], {{-one, dm[s]}});
      // [J+-, Delta_+-^(s)] = 0 (matching subscripts)
      add(Gen::Jplus, dp[s], {});
      add(Gen::Jminus, dm[s], {});
      // [J+-, Delta_-+^(s)] = +- 2 Delta_z^(s)
      add(Gen::Jplus, dm[s], {{two, dz[s]}});
      add(Gen::Jminus, dp[s], {{-two, dz[s]}});
      // [J+-, Delta_z^(s)] = -+ Delta_+-^(s)
      add(Gen::Jplus, dz[s], {{-one, dp[s]}});
      add(Gen::Jminus, dz[s], {{one, dm[s]}});
    }
    // [Delta_z^(+), Delta_z^(-)] = -2 Gamma0
    add(Gen::DeltaZP, Gen::DeltaZM, {{-two, Gen::Gamma0}});
    // Same-superscript pairs all vanish.
    for (int s = 0; s < 2; ++s) {
      add(dz[s], dp[s], {});
      add(dz[s], dm[s], {});
      add(dp[s], dm[s], {});
    }
    // [Delta_z^(s), Delta_+-^(-s)] = -+ 2 J_+-
    add(Gen::DeltaZP, dp[1], {{-two, Gen::Jplus}});
    add(Gen::DeltaZP, dm[1], {{two, Gen::Jminus}});
    add(Gen::DeltaZM, dp[0], {{-two, Gen::Jplus}});
    add(Gen::DeltaZM, dm[0], {{two, Gen::Jminus}});
    // [Delta_a^(+), Delta_a^(-)] = 0 (matching subscripts)
    add(dp[0], dp[1], {});
    add(dm[0], dm[1], {});
    // [Delta_+^(s), Delta_-^(-s)] = -4 (Jz + s Gamma0)
    add(dp[0], dm[1], {{Rational(-4), Gen::Jz}, {Rational(-4), Gen::Gamma0}});
    add(dp[1], dm[0], {{Rational(-4), Gen::Jz}, {Rational(4), Gen::Gamma0}});
    return out;
  }();
  return rules;
}

/// Structure constants f with [G_a, G_b] = sum_c f[a][b][c] G_c over the
/// kAlgebraBasis order.  Antisymmetric by construction; the Jacobi identity
/// is checked by jacobi_holds().
class StructureConstants {
 public:
  StructureConstants() {
    for (auto& plane : f_)
      for (auto& row : plane) row.fill(ComplexScalar());
    for (const CommutatorRule& r : jkg_commutator_rules()) {
      for (const auto& [c, idx] : r.rhs) {
        f_[r.a][r.b][idx] = c;
        f_[r.b][r.a][idx] = -c;
      }
    }
  }

  const ComplexScalar& operator()(int a, int b, int c) const { return f_[a][b][c]; }

  bool jacobi_holds() const {
    for (int a = 0; a < 10; ++a)
      for (int b = a + 1; b < 10; ++b)
        for (int c = b + 1; c < 10; ++c)
          for (int e = 0; e < 10; ++e) {
            ComplexScalar sum;
            for (int d = 0; d < 10; ++d) {
              sum += f_[a][b][d] * f_[d][c][e];
              sum += f_[b][c][d] * f_[d][a][e];
              sum += f_[c][a][d] * f_[d][b][e];
            }
            if (!sum.is_zero()) return false;
          }
    return true;
  }

  /// Adjoint matrix of G_a in the convention [G_r, G_a] = -i (g_a)_r^s G_s.
  ExactMatrix adjoint_matrix(int a) const {
    ExactMatrix g(10);
    const ComplexScalar I = ComplexScalar::i();
    for (int r = 0; r < 10; ++r)
      for (int s = 0; s < 10; ++s) g(r, s) = I * f_[r][a][s];
    return g;
  }

 private:
  std::array<std::array<std::array<ComplexScalar, 10>, 10>, 10> f_;
};

inline const StructureConstants& structure_constants() {
  static const StructureConstants f;
  return f;
}

/// Group metric eta_ab = (g_a)_r^s (g_b)_s^r contracted from the adjoint
/// matrices, exactly.  Block-diagonal in {J}, {K}, {Gamma}; the Gamma block
/// reproduces a Minkowski metric.
inline ExactMatrix group_metric() {
  const StructureConstants& f = structure_constants();
  std::array<ExactMatrix, 10> adj;
  for (int a = 0; a < 10; ++a) adj[a] = f.adjoint_matrix(a);
  ExactMatrix eta(10);
  for (int a = 0; a < 10; ++a)
    for (int b = 0; b < 10; ++b) {
      ComplexScalar sum;
      for (int r = 0; r < 10; ++r)
        for (int s = 0; s < 10; ++s) sum += adj[a](r, s) * adj[b](s, r);
      eta(a, b) = sum;
    }
  return eta;
}

}  // namespace exlorentz
