#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "exlorentz/half_integer.hpp"

namespace exlorentz {

/// Largest maximal spin the builders accept by default.
inline constexpr int kDefaultLambdaCap = 6;

/// Monomial chi1^a chi2^b chi3^c chi4^d in the four spinor variables
///   chi1 = chi_+^(+), chi2 = chi_-^(+), chi3 = chi_+^(-), chi4 = chi_-^(-).
/// Ordered graded-lexicographically on (a, b, c, d).
struct Monomial {
  std::array<int, 4> e{0, 0, 0, 0};

  int degree() const { return e[0] + e[1] + e[2] + e[3]; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (int k = 0; k < 4; ++k)
      if (auto c = a.e[k] <=> b.e[k]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  /// Twice the J_z weight: chi1, chi3 carry +1/2 and chi2, chi4 carry -1/2.
  int twice_jz_weight() const { return e[0] - e[1] + e[2] - e[3]; }
  /// Twice the Gamma0 charge: chi1, chi2 carry +1/2 and chi3, chi4 carry -1/2.
  int twice_gamma_weight() const { return e[0] + e[1] - e[2] - e[3]; }
};

inline std::string to_string(const Monomial& m) {
  static const char* names[4] = {"x1", "x2", "x3", "x4"};
  if (m.degree() == 0) return "1";
  std::string s;
  for (int k = 0; k < 4; ++k) {
    if (m.e[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[k];
    if (m.e[k] > 1) s += "^" + std::to_string(m.e[k]);
  }
  return s;
}

/// All monomials of total degree 2*Lambda, greatest first in the graded-lex
/// order.  The count is the binomial C(2L+3, 3).
inline std::vector<Monomial> monomial_basis(HalfInteger lambda,
                                            int lambda_cap = kDefaultLambdaCap) {
  if (lambda.twice < 0) throw InvalidJ("Lambda must be nonnegative");
  if (lambda > HalfInteger(lambda_cap))
    throw LambdaTooLarge("Lambda " + to_string(lambda) + " exceeds cap " +
                         std::to_string(lambda_cap));
  const int deg = lambda.twice;
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>((deg + 1) * (deg + 2) * (deg + 3) / 6));
  for (int a = deg; a >= 0; --a)
    for (int b = deg - a; b >= 0; --b)
      for (int c = deg - a - b; c >= 0; --c)
        out.push_back(Monomial{{a, b, c, deg - a - b - c}});
  return out;
}

}  // namespace exlorentz
