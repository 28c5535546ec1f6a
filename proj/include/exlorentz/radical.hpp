#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "exlorentz/rational.hpp"

namespace exlorentz {

/// Exact number of the form sum_i q_i * sqrt(n_i) with rational q_i and
/// squarefree positive integer radicands n_i.  Radicand 1 is the rational
/// part.  Terms are kept sorted by radicand with no zero coefficients, so
/// the empty term list is the canonical zero and equality is structural.
///
/// This ring is closed under +, * and sqrt(rational >= 0), which is all
/// the representation construction ever needs.  Division is deliberately
/// restricted to single-term values (see inverse()).
class RadicalScalar {
 public:
  struct Term {
    std::int64_t radicand = 1;  // squarefree, >= 1
    Rational coeff;
  };

  /// Radicands above this bound abort with RadicandOverflow rather than
  /// attempting a large factorization.
  static constexpr std::int64_t kRadicandCap = std::int64_t{1} << 31;

  RadicalScalar() = default;
  RadicalScalar(std::int64_t value) {  // NOLINT: implicit by design
    if (value != 0) terms_.push_back({1, Rational(value)});
  }
  RadicalScalar(const Rational& value) {  // NOLINT: implicit by design
    if (!value.is_zero()) terms_.push_back({1, value});
  }

  /// q * sqrt(n); n must be squarefree (checked only by debug callers).
  static RadicalScalar term(const Rational& q, std::int64_t radicand) {
    RadicalScalar r;
    if (!q.is_zero()) r.terms_.push_back({radicand, q});
    return r;
  }

  /// Exact square root of a nonnegative rational: sqrt(a/b) = (1/b) sqrt(a b)
  /// with the square part of a*b pulled out by trial division.
  static RadicalScalar sqrt_of(const Rational& q) {
    if (q.sign() < 0) throw NegativeRadicand("square root of negative rational");
    if (q.is_zero()) return RadicalScalar();
    __int128 prod = static_cast<__int128>(q.numerator()) * q.denominator();
    if (prod > kRadicandCap) throw RadicandOverflow("radicand exceeds factorization bound");
    std::int64_t r = static_cast<std::int64_t>(prod);
    std::int64_t square = 1;
    for (std::int64_t d = 2; d * d <= r; ++d) {
      while (r % (d * d) == 0) {
        r /= d * d;
        square *= d;
      }
    }
    return term(Rational(square, q.denominator()), r);
  }

  /// sqrt(n) for a squarefree positive integer n.
  static RadicalScalar root(std::int64_t n) { return sqrt_of(Rational(n)); }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].radicand == 1);
  }
  bool is_single_term() const { return terms_.size() == 1; }
  const std::vector<Term>& terms() const { return terms_; }

  /// Rational part only; throws unless the value is purely rational.
  Rational as_rational() const {
    if (terms_.empty()) return Rational();
    if (terms_.size() == 1 && terms_[0].radicand == 1) return terms_[0].coeff;
    throw Error("value is not rational: " + to_string(*this));
  }

  friend RadicalScalar operator+(const RadicalScalar& a, const RadicalScalar& b) {
    RadicalScalar out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->radicand < ib->radicand)) {
        out.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || ib->radicand < ia->radicand) {
        out.terms_.push_back(*ib++);
      } else {
        Rational c = ia->coeff + ib->coeff;
        if (!c.is_zero()) out.terms_.push_back({ia->radicand, c});
        ++ia;
        ++ib;
      }
    }
    return out;
  }

  friend RadicalScalar operator-(const RadicalScalar& a) {
    RadicalScalar out = a;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
  }

  friend RadicalScalar operator-(const RadicalScalar& a, const RadicalScalar& b) {
    return a + (-b);
  }

  /// sqrt(m)*sqrt(n) = g*sqrt((m/g)(n/g)) with g = gcd(m, n); the reduced
  /// product of two squarefree integers is squarefree, so no factorization
  /// is needed here.
  friend RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b) {
    RadicalScalar out;
    for (const Term& ta : a.terms_) {
      for (const Term& tb : b.terms_) {
        std::int64_t g = std::gcd(ta.radicand, tb.radicand);
        __int128 rad = static_cast<__int128>(ta.radicand / g) * (tb.radicand / g);
        if (rad > kRadicandCap) throw RadicandOverflow("radicand exceeds factorization bound");
        Rational c = ta.coeff * tb.coeff * Rational(g);
        out = out + term(c, static_cast<std::int64_t>(rad));
      }
    }
    return out;
  }

  RadicalScalar& operator+=(const RadicalScalar& o) { return *this = *this + o; }
  RadicalScalar& operator-=(const RadicalScalar& o) { return *this = *this - o; }
  RadicalScalar& operator*=(const RadicalScalar& o) { return *this = *this * o; }

  friend bool operator==(const RadicalScalar& a, const RadicalScalar& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].radicand != b.terms_[i].radicand ||
          !(a.terms_[i].coeff == b.terms_[i].coeff))
        return false;
    return true;
  }

  /// Inverse of a single-term value q*sqrt(n): (1/(q n)) sqrt(n).
  /// Sums of radicals would need full field-extension machinery that the
  /// construction never requires; they are rejected instead.
  RadicalScalar inverse() const {
    if (terms_.empty()) throw Error("inverse of zero");
    if (terms_.size() != 1)
      throw MultiTermInverse("inverse of multi-term radical value: " + to_string(*this));
    const Term& t = terms_[0];
    return term(Rational(1) / (t.coeff * Rational(t.radicand)), t.radicand);
  }

  double to_double() const {
    double sum = 0.0;
    for (const Term& t : terms_)
      sum += t.coeff.to_double() * std::sqrt(static_cast<double>(t.radicand));
    return sum;
  }

  /// Exact for zero and single-term values.  For sums the sign is decided
  /// by floating evaluation, which is reliable well away from zero; an
  /// ambiguous evaluation aborts rather than guessing.
  int sign() const {
    if (terms_.empty()) return 0;
    if (terms_.size() == 1) return terms_[0].coeff.sign();
    double v = to_double();
    double scale = 0.0;
    for (const Term& t : terms_)
      scale += std::abs(t.coeff.to_double()) * std::sqrt(static_cast<double>(t.radicand));
    if (std::abs(v) <= 1e-9 * scale)
      throw Error("sign of radical sum too close to zero to resolve: " + to_string(*this));
    return v > 0 ? 1 : -1;
  }

  friend std::string to_string(const RadicalScalar& v) {
    if (v.terms_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < v.terms_.size(); ++i) {
      const Term& t = v.terms_[i];
      Rational c = t.coeff;
      if (i == 0) {
        if (c.sign() < 0) {
          s += "-";
          c = -c;
        }
      } else {
        s += c.sign() < 0 ? " - " : " + ";
        c = c.abs();
      }
      if (t.radicand == 1) {
        s += to_string(c);
      } else {
        if (!c.is_one()) s += to_string(c) + "*";
        s += "sqrt(" + std::to_string(t.radicand) + ")";
      }
    }
    return s;
  }

 private:
  std::vector<Term> terms_;
};

/// Complex number over the radical ring.
struct ComplexScalar {
  RadicalScalar re;
  RadicalScalar im;

  ComplexScalar() = default;
  ComplexScalar(std::int64_t v) : re(v) {}  // NOLINT: implicit by design
  ComplexScalar(const Rational& v) : re(v) {}  // NOLINT: implicit by design
  ComplexScalar(const RadicalScalar& v) : re(v) {}  // NOLINT: implicit by design
  ComplexScalar(RadicalScalar real, RadicalScalar imag)
      : re(std::move(real)), im(std::move(imag)) {}

  static ComplexScalar i() { return ComplexScalar(RadicalScalar(), RadicalScalar(1)); }
  static ComplexScalar i_times(const Rational& q) {
    return ComplexScalar(RadicalScalar(), RadicalScalar(q));
  }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  ComplexScalar conj() const { return {re, -im}; }

  friend ComplexScalar operator+(const ComplexScalar& a, const ComplexScalar& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexScalar operator-(const ComplexScalar& a, const ComplexScalar& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexScalar operator-(const ComplexScalar& a) { return {-a.re, -a.im}; }
  friend ComplexScalar operator*(const ComplexScalar& a, const ComplexScalar& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  ComplexScalar& operator+=(const ComplexScalar& o) { return *this = *this + o; }
  ComplexScalar& operator-=(const ComplexScalar& o) { return *this = *this - o; }
  ComplexScalar& operator*=(const ComplexScalar& o) { return *this = *this * o; }

  friend bool operator==(const ComplexScalar& a, const ComplexScalar& b) {
    return a.re == b.re && a.im == b.im;
  }

  /// Inverse of a value that is purely real or purely imaginary with a
  /// single radical term; everything the normalization path produces.
  ComplexScalar inverse() const {
    if (im.is_zero()) return ComplexScalar(re.inverse());
    if (re.is_zero()) return ComplexScalar(RadicalScalar(), -im.inverse());
    throw MultiTermInverse("inverse of general complex radical value");
  }

  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

  friend std::string to_string(const ComplexScalar& v) {
    if (v.im.is_zero()) return to_string(v.re);
    if (v.re.is_zero()) return "(" + to_string(v.im) + ")*i";
    return "(" + to_string(v.re) + ") + (" + to_string(v.im) + ")*i";
  }
};

}  // namespace exlorentz
