#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "exlorentz/generators.hpp"

namespace exlorentz {

/// Simultaneous eigenvalue labels of a basis state: Casimir multiplet
/// (lambda), J^2 (j), Gamma0 (gamma) and J_z (m).
struct StateLabel {
  HalfInteger lambda;
  HalfInteger j;
  HalfInteger gamma;
  HalfInteger m;

  friend bool operator==(const StateLabel&, const StateLabel&) = default;
};

inline std::string to_string(const StateLabel& l) {
  return "psi[" + to_string(l.lambda) + "," + to_string(l.j) + ";" + to_string(l.gamma) +
         "," + to_string(l.m) + "]";
}

/// Smallest J occurring for a given Lambda: 0 for integral systems, 1/2
/// for half-integral ones.
inline HalfInteger j_min(HalfInteger lambda) {
  return HalfInteger::from_twice(lambda.twice % 2 == 0 ? 0 : 1);
}

/// Number of states (Lambda+1)(2 Lambda+1)(2 Lambda+3)/3.  The equivalent
/// forms sum_J (2J+1)^2 and C(2 Lambda+3, 3) are asserted in the tests.
inline long long state_count(HalfInteger lambda) {
  if (lambda.twice < 0) throw InvalidJ("Lambda must be nonnegative");
  long long t = lambda.twice;
  return (t + 1) * (t + 2) * (t + 3) / 6;
}

namespace detail {

/// Strict basis order: J ascending, then gamma descending, then M
/// descending.  Chosen to make every matrix come out in the familiar
/// block layout (Gamma0 blocks ordered by charge, J_z descending inside).
struct LabelOrder {
  bool operator()(const StateLabel& a, const StateLabel& b) const {
    if (a.j != b.j) return a.j < b.j;
    if (a.gamma != b.gamma) return b.gamma < a.gamma;
    return b.m < a.m;
  }
};

/// (-1)^((J-gamma)(J+gamma)).  Both factors are integers; for integer J
/// this is the usual alternating sign (-1)^(J-gamma), for half-integer J
/// the product is always even and the sign is +1.  This is the unique
/// leading-coefficient convention that reproduces both reference tables
/// (the spin-1/2 matrices and the signed spin-1 state list).
inline int seed_sign(HalfInteger j, HalfInteger gamma) {
  long long a = (j.twice - gamma.twice) / 2;
  long long b = (j.twice + gamma.twice) / 2;
  return (a * b) % 2 == 0 ? 1 : -1;
}

/// Divide by the positive norm, then set the sign of the graded-lex
/// leading coefficient to match seed_sign.
inline SpinorPolynomial normalize_and_fix_sign(const SpinorPolynomial& p, HalfInteger j,
                                               HalfInteger gamma) {
  ComplexScalar n2 = inner_product(p, p);
  if (!n2.im.is_zero()) throw Error("state norm squared is not real");
  if (!n2.re.is_rational())
    throw MultiTermInverse("state norm squared is not rational: " + to_string(n2.re));
  RadicalScalar norm = RadicalScalar::sqrt_of(n2.re.as_rational());
  SpinorPolynomial unit = ComplexScalar(norm.inverse()) * p;

  ComplexScalar lead = unit.coeff(unit.leading_monomial());
  if (!lead.im.is_zero()) throw Error("leading coefficient is not real");
  if (lead.re.sign() != seed_sign(j, gamma)) unit = ComplexScalar(-1) * unit;
  return unit;
}

}  // namespace detail

/// The normalized, sign-fixed bottom state psi[Lambda,J; -J,-J] built from
/// the closed form (x - y)^(Lambda-J) chi4^(2J) with x = chi1 chi4 and
/// y = chi2 chi3.  The (x - y) factor is a rotation scalar, so the result
/// carries J as its angular momentum and (-J, -J) as its weights.
inline SpinorPolynomial seed_state(HalfInteger lambda, HalfInteger j) {
  if (j < j_min(lambda) || lambda < j || (lambda.twice - j.twice) % 2 != 0)
    throw InvalidJ("invalid J = " + to_string(j) + " for Lambda = " + to_string(lambda));

  SpinorPolynomial x = SpinorPolynomial::monomial(Monomial{{1, 0, 0, 1}});
  SpinorPolynomial y = SpinorPolynomial::monomial(Monomial{{0, 1, 1, 0}});
  SpinorPolynomial xmy = x - y;

  SpinorPolynomial p = SpinorPolynomial::monomial(Monomial{{0, 0, 0, j.twice}});
  const int scalar_power = (lambda.twice - j.twice) / 2;
  for (int k = 0; k < scalar_power; ++k) {
    SpinorPolynomial next;
    for (const auto& [mx, cx] : xmy.terms())
      for (const auto& [mp, cp] : p.terms()) {
        Monomial prod;
        for (int v = 0; v < 4; ++v) prod.e[v] = mx.e[v] + mp.e[v];
        next.add_term(prod, cx * cp);
      }
    p = std::move(next);
  }
  return detail::normalize_and_fix_sign(p, j, -j);
}

/// Ordered orthonormal eigenbasis for one Lambda.
struct LabeledBasis {
  HalfInteger lambda;
  std::vector<std::pair<StateLabel, SpinorPolynomial>> states;

  std::size_t dimension() const { return states.size(); }

  /// Index of a label; -1 if absent.
  int index_of(const StateLabel& l) const {
    for (std::size_t i = 0; i < states.size(); ++i)
      if (states[i].first == l) return static_cast<int>(i);
    return -1;
  }
};

/// Build all N states by ladder action:
///   - for each J, start from seed_state(Lambda, J);
///   - climb gamma with DeltaJ^(+), renormalizing and re-fixing the sign
///     after each step (the raw DeltaJ coefficient is not trusted; see
///     verify_action_table for the measured values);
///   - climb M inside each gamma with J_+, dividing by the exact ladder
///     coefficient sqrt((J+M+1)(J-M)) taken at the source M.
inline LabeledBasis build_labeled_basis(HalfInteger lambda,
                                        int lambda_cap = kDefaultLambdaCap) {
  if (lambda.twice < 0) throw InvalidJ("Lambda must be nonnegative");
  if (lambda > HalfInteger(lambda_cap))
    throw LambdaTooLarge("Lambda " + to_string(lambda) + " exceeds cap " +
                         std::to_string(lambda_cap));

  std::map<StateLabel, SpinorPolynomial, detail::LabelOrder> table;
  for (HalfInteger j = j_min(lambda); j <= lambda; j = j + HalfInteger(1)) {
    SpinorPolynomial bottom = seed_state(lambda, j);
    for (HalfInteger gamma = -j; gamma <= j; gamma = gamma + HalfInteger(1)) {
      if (gamma != -j) {
        SpinorPolynomial raised = apply_generator(Gen::DeltaJP, bottom);
        if (raised.is_zero())
          throw DegenerateState("DeltaJ+ annihilated " +
                                to_string(StateLabel{lambda, j, gamma - HalfInteger(1), -j}));
        bottom = detail::normalize_and_fix_sign(raised, j, gamma);
      }
      SpinorPolynomial cur = bottom;
      table.emplace(StateLabel{lambda, j, gamma, -j}, cur);
      for (HalfInteger m = -j; m < j; m = m + HalfInteger(1)) {
        // (J+M+1)(J-M) at the source M, exactly.
        Rational c2(static_cast<std::int64_t>(j.twice + m.twice + 2) *
                        (j.twice - m.twice),
                    4);
        RadicalScalar coeff = RadicalScalar::sqrt_of(c2);
        cur = ComplexScalar(coeff.inverse()) * apply_generator(Gen::Jplus, cur);
        table.emplace(StateLabel{lambda, j, gamma, m + HalfInteger(1)}, cur);
      }
    }
  }

  LabeledBasis basis;
  basis.lambda = lambda;
  basis.states.assign(table.begin(), table.end());
  if (static_cast<long long>(basis.states.size()) != state_count(lambda))
    throw Error("state construction produced the wrong count");
  return basis;
}

}  // namespace exlorentz
