#pragma once

#include <array>
#include <string>
#include <vector>

#include "exlorentz/polynomial.hpp"

namespace exlorentz {

/// Everything that can act on a spinor polynomial.  The first ten entries
/// after Jx/Jy removal -- Jz, Jplus, Jminus, Gamma0 and the six Deltas --
/// are primitive first-order differential operators; the rest are expanded
/// into those primitives when applied:
///
///   Jx = (J+ + J-)/2                  Jy = (J+ - J-)/(2i)
///   Gamma_k = (Delta_k^(+) + Delta_k^(-))/2
///   K_k     = (Delta_k^(+) - Delta_k^(-))/(2i)
///   Delta_x^(s) = (Delta_+^(s) + Delta_-^(s))/2,  Delta_y analogous
///   DeltaJ^(s)  = Jx Delta_x^(s) + Jy Delta_y^(s) + Jz Delta_z^(s)
///   Casimir     = J.J - K.K + Gamma0^2 - Gamma.Gamma
enum class Gen {
  Jz,
  Jplus,
  Jminus,
  Jx,
  Jy,
  Gamma0,
  DeltaZP,   // Delta_z^(+)
  DeltaZM,   // Delta_z^(-)
  DeltaPP,   // Delta_+^(+)
  DeltaPM,   // Delta_+^(-)
  DeltaMP,   // Delta_-^(+)
  DeltaMM,   // Delta_-^(-)
  Gamma1,
  Gamma2,
  Gamma3,
  K1,
  K2,
  K3,
  DeltaJP,   // DeltaJ^(+)
  DeltaJM,   // DeltaJ^(-)
  Casimir,
};

inline constexpr std::array<Gen, 21> kAllGenerators = {
    Gen::Jz,      Gen::Jplus,   Gen::Jminus,  Gen::Jx,      Gen::Jy,
    Gen::Gamma0,  Gen::DeltaZP, Gen::DeltaZM, Gen::DeltaPP, Gen::DeltaPM,
    Gen::DeltaMP, Gen::DeltaMM, Gen::Gamma1,  Gen::Gamma2,  Gen::Gamma3,
    Gen::K1,      Gen::K2,      Gen::K3,      Gen::DeltaJP, Gen::DeltaJM,
    Gen::Casimir};

inline const char* gen_name(Gen g) {
  switch (g) {
    case Gen::Jz: return "Jz";
    case Gen::Jplus: return "Jplus";
    case Gen::Jminus: return "Jminus";
    case Gen::Jx: return "Jx";
    case Gen::Jy: return "Jy";
    case Gen::Gamma0: return "Gamma0";
    case Gen::DeltaZP: return "DeltaZ+";
    case Gen::DeltaZM: return "DeltaZ-";
    case Gen::DeltaPP: return "DeltaPlus+";
    case Gen::DeltaPM: return "DeltaPlus-";
    case Gen::DeltaMP: return "DeltaMinus+";
    case Gen::DeltaMM: return "DeltaMinus-";
    case Gen::Gamma1: return "Gamma1";
    case Gen::Gamma2: return "Gamma2";
    case Gen::Gamma3: return "Gamma3";
    case Gen::K1: return "K1";
    case Gen::K2: return "K2";
    case Gen::K3: return "K3";
    case Gen::DeltaJP: return "DeltaJ+";
    case Gen::DeltaJM: return "DeltaJ-";
    case Gen::Casimir: return "Casimir";
  }
  return "?";
}

namespace detail {

/// One term of a first-order operator: coeff * chi_mul * d/d(chi_diff).
struct LadderTerm {
  Rational coeff;
  int mul_var;
  int diff_var;
};

/// Spinor forms of the primitive generators.  Variable indices follow the
/// Monomial convention: 0 = chi_+^(+), 1 = chi_-^(+), 2 = chi_+^(-),
/// 3 = chi_-^(-).
inline const std::vector<LadderTerm>& primitive_terms(Gen g) {
  static const std::vector<LadderTerm> jz = {
      {{1, 2}, 0, 0}, {{-1, 2}, 1, 1}, {{1, 2}, 2, 2}, {{-1, 2}, 3, 3}};
  static const std::vector<LadderTerm> jplus = {{{1}, 0, 1}, {{1}, 2, 3}};
  static const std::vector<LadderTerm> jminus = {{{1}, 1, 0}, {{1}, 3, 2}};
  static const std::vector<LadderTerm> gamma0 = {
      {{1, 2}, 0, 0}, {{1, 2}, 1, 1}, {{-1, 2}, 2, 2}, {{-1, 2}, 3, 3}};
  static const std::vector<LadderTerm> dzp = {{{1}, 0, 2}, {{-1}, 1, 3}};
  static const std::vector<LadderTerm> dzm = {{{-1}, 2, 0}, {{1}, 3, 1}};
  static const std::vector<LadderTerm> dpp = {{{2}, 0, 3}};
  static const std::vector<LadderTerm> dpm = {{{-2}, 2, 1}};
  static const std::vector<LadderTerm> dmp = {{{2}, 1, 2}};
  static const std::vector<LadderTerm> dmm = {{{-2}, 3, 0}};
  switch (g) {
    case Gen::Jz: return jz;
    case Gen::Jplus: return jplus;
    case Gen::Jminus: return jminus;
    case Gen::Gamma0: return gamma0;
    case Gen::DeltaZP: return dzp;
    case Gen::DeltaZM: return dzm;
    case Gen::DeltaPP: return dpp;
    case Gen::DeltaPM: return dpm;
    case Gen::DeltaMP: return dmp;
    case Gen::DeltaMM: return dmm;
    default: throw Error("not a primitive generator");
  }
}

/// coeff * (word[0] word[1] ...), words applied rightmost factor first.
struct CompositeTerm {
  ComplexScalar coeff;
  std::vector<Gen> word;
};

inline const std::vector<CompositeTerm>& composite_terms(Gen g) {
  static const Rational half(1, 2), quarter(1, 4);
  static const auto i_over = [](const Rational& q) { return ComplexScalar::i_times(q); };

  static const std::vector<CompositeTerm> jx = {{half, {Gen::Jplus}}, {half, {Gen::Jminus}}};
  static const std::vector<CompositeTerm> jy = {{i_over({-1, 2}), {Gen::Jplus}},
                                                {i_over({1, 2}), {Gen::Jminus}}};
  static const std::vector<CompositeTerm> gamma1 = {{quarter, {Gen::DeltaPP}},
                                                    {quarter, {Gen::DeltaMP}},
                                                    {quarter, {Gen::DeltaPM}},
                                                    {quarter, {Gen::DeltaMM}}};
  static const std::vector<CompositeTerm> gamma2 = {{i_over({-1, 4}), {Gen::DeltaPP}},
                                                    {i_over({1, 4}), {Gen::DeltaMP}},
                                                    {i_over({-1, 4}), {Gen::DeltaPM}},
                                                    {i_over({1, 4}), {Gen::DeltaMM}}};
  static const std::vector<CompositeTerm> gamma3 = {{half, {Gen::DeltaZP}},
                                                    {half, {Gen::DeltaZM}}};
  static const std::vector<CompositeTerm> k1 = {{i_over({-1, 4}), {Gen::DeltaPP}},
                                                {i_over({-1, 4}), {Gen::DeltaMP}},
                                                {i_over({1, 4}), {Gen::DeltaPM}},
                                                {i_over({1, 4}), {Gen::DeltaMM}}};
  static const std::vector<CompositeTerm> k2 = {{Rational(-1, 4), {Gen::DeltaPP}},
                                                {quarter, {Gen::DeltaMP}},
                                                {quarter, {Gen::DeltaPM}},
                                                {Rational(-1, 4), {Gen::DeltaMM}}};
  static const std::vector<CompositeTerm> k3 = {{i_over({-1, 2}), {Gen::DeltaZP}},
                                                {i_over({1, 2}), {Gen::DeltaZM}}};
  // J.Delta^(s) = (J+ Delta_-^(s) + J- Delta_+^(s))/2 + Jz Delta_z^(s)
  static const std::vector<CompositeTerm> djp = {{half, {Gen::Jplus, Gen::DeltaMP}},
                                                 {half, {Gen::Jminus, Gen::DeltaPP}},
                                                 {Rational(1), {Gen::Jz, Gen::DeltaZP}}};
  static const std::vector<CompositeTerm> djm = {{half, {Gen::Jplus, Gen::DeltaMM}},
                                                 {half, {Gen::Jminus, Gen::DeltaPM}},
                                                 {Rational(1), {Gen::Jz, Gen::DeltaZM}}};
  // J.J - K.K + Gamma0^2 - Gamma.Gamma, with the K and Gamma parts combined
  // into the symmetrized Delta products -(1/2) sum_k {D_k^(+), D_k^(-)}.
  static const std::vector<CompositeTerm> casimir = {
      {half, {Gen::Jplus, Gen::Jminus}},
      {half, {Gen::Jminus, Gen::Jplus}},
      {Rational(1), {Gen::Jz, Gen::Jz}},
      {Rational(1), {Gen::Gamma0, Gen::Gamma0}},
      {Rational(-1, 4), {Gen::DeltaPP, Gen::DeltaMM}},
      {Rational(-1, 4), {Gen::DeltaMP, Gen::DeltaPM}},
      {Rational(-1, 4), {Gen::DeltaPM, Gen::DeltaMP}},
      {Rational(-1, 4), {Gen::DeltaMM, Gen::DeltaPP}},
      {Rational(-1, 2), {Gen::DeltaZP, Gen::DeltaZM}},
      {Rational(-1, 2), {Gen::DeltaZM, Gen::DeltaZP}}};

  switch (g) {
    case Gen::Jx: return jx;
    case Gen::Jy: return jy;
    case Gen::Gamma1: return gamma1;
    case Gen::Gamma2: return gamma2;
    case Gen::Gamma3: return gamma3;
    case Gen::K1: return k1;
    case Gen::K2: return k2;
    case Gen::K3: return k3;
    case Gen::DeltaJP: return djp;
    case Gen::DeltaJM: return djm;
    case Gen::Casimir: return casimir;
    default: throw Error("not a composite generator");
  }
}

inline SpinorPolynomial apply_primitive(Gen g, const SpinorPolynomial& p) {
  SpinorPolynomial out;
  for (const auto& term : primitive_terms(g)) {
    for (const auto& [m, c] : p.terms()) {
      int pow = m.e[term.diff_var];
      if (pow == 0) continue;
      Monomial shifted = m;
      --shifted.e[term.diff_var];
      ++shifted.e[term.mul_var];
      out.add_term(shifted, ComplexScalar(RadicalScalar(term.coeff * Rational(pow))) * c);
    }
  }
  return out;
}

}  // namespace detail

inline bool is_primitive(Gen g) {
  switch (g) {
    case Gen::Jz:
    case Gen::Jplus:
    case Gen::Jminus:
    case Gen::Gamma0:
    case Gen::DeltaZP:
    case Gen::DeltaZM:
    case Gen::DeltaPP:
    case Gen::DeltaPM:
    case Gen::DeltaMP:
    case Gen::DeltaMM:
      return true;
    default:
      return false;
  }
}

/// Exact action of any generator.  Primitives act directly as sums of
/// multiply-one-variable times differentiate-one-variable maps; composites
/// expand into primitive words on the fly, so the spinor forms remain the
/// single source of truth.  Degree is preserved term by term.
inline SpinorPolynomial apply_generator(Gen g, const SpinorPolynomial& p) {
  if (is_primitive(g)) return detail::apply_primitive(g, p);
  SpinorPolynomial out;
  for (const auto& term : detail::composite_terms(g)) {
    SpinorPolynomial cur = p;
    for (auto it = term.word.rbegin(); it != term.word.rend(); ++it)
      cur = detail::apply_primitive(*it, cur);
    out = out + term.coeff * cur;
  }
  return out;
}

}  // namespace exlorentz
