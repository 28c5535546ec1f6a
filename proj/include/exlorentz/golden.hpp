#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "exlorentz/exact_matrix.hpp"

namespace exlorentz {

/// Reference data for the two smallest systems.  The spin-1/2
/// matrices and the signed spin-1 state list are exact targets; the spin-1
/// Delta displays are kept for sparsity-pattern and entry-ratio comparison
/// only, since their printed scale is not consistent with the normalized
/// states (see verification.hpp).
namespace golden {

namespace detail {

inline ExactMatrix from_entries(
    std::size_t n, const std::vector<std::tuple<int, int, ComplexScalar>>& entries) {
  ExactMatrix m(n);
  for (const auto& [i, j, v] : entries) m(i - 1, j - 1) = v;  // 1-based tables
  return m;
}

inline ComplexScalar sqrt2() { return ComplexScalar(RadicalScalar::root(2)); }

}  // namespace detail

/// Spin-1/2 reference matrices in the basis (gamma=+1/2 M=+1/2, +1/2 -1/2,
/// -1/2 +1/2, -1/2 -1/2).  Keys: Gamma0..3, J1..3, K1..3, DeltaX+/-,
/// DeltaY+/-, DeltaZ+/- (Cartesian Delta components).
inline const std::map<std::string, ExactMatrix>& half_matrices() {
  static const std::map<std::string, ExactMatrix> tables = [] {
    using detail::from_entries;
    const Rational h(1, 2);
    const ComplexScalar ih = ComplexScalar::i_times(h);   // i/2
    const ComplexScalar mih = ComplexScalar::i_times({-1, 2});
    const ComplexScalar I = ComplexScalar::i();
    std::map<std::string, ExactMatrix> t;
    t["Gamma0"] = from_entries(4, {{1, 1, h}, {2, 2, h}, {3, 3, -h}, {4, 4, -h}});
    t["J1"] = from_entries(4, {{1, 2, h}, {2, 1, h}, {3, 4, h}, {4, 3, h}});
    t["J2"] = from_entries(4, {{1, 2, mih}, {2, 1, ih}, {3, 4, mih}, {4, 3, ih}});
    t["J3"] = from_entries(4, {{1, 1, h}, {2, 2, -h}, {3, 3, h}, {4, 4, -h}});
    t["Gamma1"] = from_entries(4, {{1, 4, h}, {2, 3, h}, {3, 2, -h}, {4, 1, -h}});
    t["Gamma2"] = from_entries(4, {{1, 4, mih}, {2, 3, ih}, {3, 2, ih}, {4, 1, mih}});
    t["Gamma3"] = from_entries(4, {{1, 3, h}, {2, 4, -h}, {3, 1, -h}, {4, 2, h}});
    t["K1"] = from_entries(4, {{1, 4, mih}, {2, 3, mih}, {3, 2, mih}, {4, 1, mih}});
    t["K2"] = from_entries(4, {{1, 4, -h}, {2, 3, h}, {3, 2, -h}, {4, 1, h}});
    t["K3"] = from_entries(4, {{1, 3, mih}, {2, 4, ih}, {3, 1, mih}, {4, 2, ih}});
    t["DeltaX+"] = from_entries(4, {{1, 4, 1}, {2, 3, 1}});
    t["DeltaY+"] = from_entries(4, {{1, 4, -I}, {2, 3, I}});
    t["DeltaZ+"] = from_entries(4, {{1, 3, 1}, {2, 4, -1}});
    t["DeltaX-"] = from_entries(4, {{3, 2, -1}, {4, 1, -1}});
    t["DeltaY-"] = from_entries(4, {{3, 2, I}, {4, 1, -I}});
    t["DeltaZ-"] = from_entries(4, {{3, 1, -1}, {4, 2, 1}});
    return t;
  }();
  return tables;
}

/// The ten signed spin-1 states, in basis order (J asc, gamma desc, M desc).
inline const std::vector<std::pair<StateLabel, SpinorPolynomial>>& spin1_states() {
  static const std::vector<std::pair<StateLabel, SpinorPolynomial>> states = [] {
    const HalfInteger L(1), one(1), zero(0);
    auto mono = [](int a, int b, int c, int d, ComplexScalar coeff = ComplexScalar(1)) {
      return SpinorPolynomial::monomial(Monomial{{a, b, c, d}}, coeff);
    };
    const ComplexScalar r2 = detail::sqrt2();
    std::vector<std::pair<StateLabel, SpinorPolynomial>> s;
    s.push_back({{L, zero, zero, zero}, mono(1, 0, 0, 1) - mono(0, 1, 1, 0)});
    s.push_back({{L, one, one, one}, mono(2, 0, 0, 0)});
    s.push_back({{L, one, one, zero}, r2 * mono(1, 1, 0, 0)});
    s.push_back({{L, one, one, -one}, mono(0, 2, 0, 0)});
    s.push_back({{L, one, zero, one}, ComplexScalar(-1) * (r2 * mono(1, 0, 1, 0))});
    s.push_back({{L, one, zero, zero},
                 ComplexScalar(-1) * (mono(1, 0, 0, 1) + mono(0, 1, 1, 0))});
    s.push_back({{L, one, zero, -one}, ComplexScalar(-1) * (r2 * mono(0, 1, 0, 1))});
    s.push_back({{L, one, -one, one}, mono(0, 0, 2, 0)});
    s.push_back({{L, one, -one, zero}, r2 * mono(0, 0, 1, 1)});
    s.push_back({{L, one, -one, -one}, mono(0, 0, 0, 2)});
    return s;
  }();
  return states;
}

/// Spin-1 exact reference matrices: Gamma0, g, Jz, Jplus, Jminus, in the
/// block order (J=0; J=1 gamma=+1; gamma=0; gamma=-1), M descending.
inline const std::map<std::string, ExactMatrix>& spin1_matrices() {
  static const std::map<std::string, ExactMatrix> tables = [] {
    using detail::from_entries;
    const ComplexScalar r2 = detail::sqrt2();
    std::map<std::string, ExactMatrix> t;
    t["Gamma0"] = from_entries(10, {{2, 2, 1}, {3, 3, 1}, {4, 4, 1},
                                    {8, 8, -1}, {9, 9, -1}, {10, 10, -1}});
    t["g"] = from_entries(10, {{1, 1, -1}, {2, 2, 1}, {3, 3, 1}, {4, 4, 1},
                               {5, 5, -1}, {6, 6, -1}, {7, 7, -1},
                               {8, 8, 1}, {9, 9, 1}, {10, 10, 1}});
    t["Jz"] = from_entries(10, {{2, 2, 1}, {4, 4, -1}, {5, 5, 1}, {7, 7, -1},
                                {8, 8, 1}, {10, 10, -1}});
    t["Jplus"] = from_entries(10, {{2, 3, r2}, {3, 4, r2}, {5, 6, r2},
                                   {6, 7, r2}, {8, 9, r2}, {9, 10, r2}});
    t["Jminus"] = from_entries(10, {{3, 2, r2}, {4, 3, r2}, {6, 5, r2},
                                    {7, 6, r2}, {9, 8, r2}, {10, 9, r2}});
    return t;
  }();
  return tables;
}

/// Spin-1 Delta displays as printed, same block order.  Used only for the
/// sparsity-pattern check and the soft entry-ratio report.
inline const std::map<std::string, ExactMatrix>& spin1_delta_displays() {
  static const std::map<std::string, ExactMatrix> tables = [] {
    using detail::from_entries;
    const ComplexScalar r2 = detail::sqrt2();
    const ComplexScalar two(2);
    const ComplexScalar two_r2 = two * r2;
    std::map<std::string, ExactMatrix> t;
    // v_z = (0,1,0), v_+ = (-sqrt2,0,0), v_- = (0,0,sqrt2);
    // Jz = diag(1,0,-1), J+ upper, J- lower with sqrt2 entries.
    t["DeltaZ+"] = from_entries(10, {{1, 9, two},            // 2 v_z^T
                                     {3, 1, -1},             // -v_z
                                     {2, 5, 1}, {4, 7, -1},  // Jz
                                     {5, 8, two}, {7, 10, -two}});  // 2 Jz
    t["DeltaZ-"] = from_entries(10, {{1, 3, two},
                                     {5, 2, -two}, {7, 4, two},    // -2 Jz
                                     {9, 1, -1},                   // -v_z
                                     {8, 5, -1}, {10, 7, 1}});     // -Jz
    t["DeltaPlus+"] = from_entries(10, {{1, 10, two_r2},               // 2 v_-^T
                                        {2, 1, r2},                    // -v_+
                                        {2, 6, r2}, {3, 7, r2},        // J+
                                        {5, 9, two_r2}, {6, 10, two_r2}});  // 2 J+
    t["DeltaMinus+"] = from_entries(10, {{1, 8, -two_r2},              // 2 v_+^T
                                         {4, 1, -r2},                  // -v_-
                                         {3, 5, r2}, {4, 6, r2},       // J-
                                         {6, 8, two_r2}, {7, 9, two_r2}});  // 2 J-
    t["DeltaPlus-"] = from_entries(10, {{1, 4, two_r2},                 // 2 v_-^T
                                        {5, 3, -two_r2}, {6, 4, -two_r2},  // -2 J+
                                        {8, 1, r2},                     // -v_+
                                        {8, 6, -r2}, {9, 7, -r2}});     // -J+
    t["DeltaMinus-"] = from_entries(10, {{1, 2, -two_r2},               // 2 v_+^T
                                         {6, 2, -two_r2}, {7, 3, -two_r2},  // -2 J-
                                         {10, 1, -r2},                  // -v_-
                                         {9, 5, -r2}, {10, 6, -r2}});   // -J-
    return t;
  }();
  return tables;
}

}  // namespace golden
}  // namespace exlorentz
