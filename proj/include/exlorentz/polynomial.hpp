#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "exlorentz/monomial.hpp"
#include "exlorentz/radical.hpp"

namespace exlorentz {

/// Polynomial in the four commuting spinor variables with ComplexScalar
/// coefficients.  Zero coefficients are never stored, so structural
/// equality is value equality.  Every state this library produces is
/// homogeneous; mixed-degree values only appear transiently in arithmetic.
class SpinorPolynomial {
 public:
  SpinorPolynomial() = default;

  static SpinorPolynomial monomial(const Monomial& m, ComplexScalar c = ComplexScalar(1)) {
    SpinorPolynomial p;
    p.add_term(m, c);
    return p;
  }

  static SpinorPolynomial one() { return monomial(Monomial{}); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, ComplexScalar>& terms() const { return terms_; }

  ComplexScalar coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ComplexScalar() : it->second;
  }

  /// Total degree if homogeneous, nullopt for zero; throws if mixed.
  std::optional<int> degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
      if (m.degree() != d) throw Error("polynomial is not homogeneous");
    return d;
  }

  /// Graded-lex greatest monomial; only valid for nonzero polynomials.
  const Monomial& leading_monomial() const {
    if (terms_.empty()) throw Error("leading monomial of zero polynomial");
    return terms_.rbegin()->first;
  }

  void add_term(const Monomial& m, const ComplexScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend SpinorPolynomial operator+(const SpinorPolynomial& a, const SpinorPolynomial& b) {
    SpinorPolynomial out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
  }
  friend SpinorPolynomial operator-(const SpinorPolynomial& a, const SpinorPolynomial& b) {
    SpinorPolynomial out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
    return out;
  }
  friend SpinorPolynomial operator*(const ComplexScalar& s, const SpinorPolynomial& p) {
    SpinorPolynomial out;
    if (s.is_zero()) return out;
    for (const auto& [m, c] : p.terms_) out.add_term(m, s * c);
    return out;
  }

  friend bool operator==(const SpinorPolynomial& a, const SpinorPolynomial& b) {
    return a.terms_ == b.terms_;
  }

  friend std::string to_string(const SpinorPolynomial& p) {
    if (p.terms_.empty()) return "0";
    std::string s;
    // Leading term first.
    for (auto it = p.terms_.rbegin(); it != p.terms_.rend(); ++it) {
      if (!s.empty()) s += " + ";
      s += "(" + to_string(it->second) + ")";
      if (it->first.degree() > 0) s += "*" + to_string(it->first);
    }
    return s;
  }

 private:
  std::map<Monomial, ComplexScalar> terms_;
};

namespace detail {

/// <m|m> = a! b! c! d! / (a+b+c+d)! as an exact rational.
inline Rational monomial_self_overlap(const Monomial& m) {
  Rational w(1);
  int placed = 0;
  // Product over variables of  e_k! / ((placed+1)...(placed+e_k))  telescopes
  // to the factorial ratio without forming large factorials.
  for (int k = 0; k < 4; ++k) {
    for (int j = 1; j <= m.e[k]; ++j) {
      ++placed;
      w *= Rational(j, placed);
    }
  }
  return w;
}

}  // namespace detail

/// Sesquilinear spinor inner product, conjugate-linear in the first slot.
/// Distinct monomials are orthogonal; a monomial's norm squared is the
/// symmetrization weight a!b!c!d!/d!, the unique degree-d extension of the
/// quadratic normalization rule.  Both arguments must be homogeneous of the
/// same degree (zero is compatible with anything).
inline ComplexScalar inner_product(const SpinorPolynomial& p, const SpinorPolynomial& q) {
  auto dp = p.degree();
  auto dq = q.degree();
  if (dp && dq && *dp != *dq)
    throw DegreeMismatch("inner product of degree " + std::to_string(*dp) +
                         " with degree " + std::to_string(*dq));
  ComplexScalar sum;
  const auto& smaller = p.term_count() <= q.term_count() ? p : q;
  const auto& other = p.term_count() <= q.term_count() ? q : p;
  const bool smaller_is_p = p.term_count() <= q.term_count();
  for (const auto& [m, c] : smaller.terms()) {
    ComplexScalar oc = other.coeff(m);
    if (oc.is_zero()) continue;
    ComplexScalar prod = smaller_is_p ? c.conj() * oc : oc.conj() * c;
    sum += ComplexScalar(RadicalScalar(detail::monomial_self_overlap(m))) * prod;
  }
  return sum;
}

/// Charge-conjugation relabeling chi_{a}^{(s)} -> chi_{a}^{(-s)}, i.e.
/// (a,b,c,d) -> (c,d,a,b) with coefficients untouched.  An involution.
inline SpinorPolynomial bar_map(const SpinorPolynomial& p) {
  SpinorPolynomial out;
  for (const auto& [m, c] : p.terms())
    out.add_term(Monomial{{m.e[2], m.e[3], m.e[0], m.e[1]}}, c);
  return out;
}

}  // namespace exlorentz
