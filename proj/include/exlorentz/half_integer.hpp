#pragma once

#include <compare>
#include <cstdlib>
#include <string>

#include "exlorentz/errors.hpp"

namespace exlorentz {

/// Exact half-integer, stored as twice its value.  Carries the labels
/// Lambda, J, gamma and M; all ordering and arithmetic act on the doubled
/// integer so no rounding can occur.
struct HalfInteger {
  int twice = 0;

  constexpr HalfInteger() = default;
  constexpr explicit HalfInteger(int whole) : twice(2 * whole) {}

  static constexpr HalfInteger from_twice(int t) {
    HalfInteger h;
    h.twice = t;
    return h;
  }

  constexpr bool is_integer() const { return twice % 2 == 0; }

  /// Valid only when is_integer().
  constexpr int as_integer() const { return twice / 2; }

  constexpr double value() const { return 0.5 * twice; }

  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

  friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) {
    return from_twice(a.twice + b.twice);
  }
  friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) {
    return from_twice(a.twice - b.twice);
  }
  friend constexpr HalfInteger operator-(HalfInteger a) { return from_twice(-a.twice); }
};

/// "3" or "-1/2".  Only denominator 2 is ever printed.
inline std::string to_string(HalfInteger h) {
  if (h.is_integer()) return std::to_string(h.as_integer());
  return std::to_string(h.twice) + "/2";
}

/// Accepts "k" or "k/2" with an optional leading sign; anything else
/// (in particular other denominators) is rejected.
inline HalfInteger parse_half_integer(const std::string& text) {
  if (text.empty()) throw ParseError("empty half-integer literal");
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = (text[pos] == '-');
    ++pos;
  }
  if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
    throw ParseError("malformed half-integer literal: " + text);
  long numerator = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    numerator = numerator * 10 + (text[pos] - '0');
    if (numerator > 1'000'000) throw ParseError("half-integer literal out of range: " + text);
    ++pos;
  }
  bool halved = false;
  if (pos < text.size()) {
    if (text.compare(pos, std::string::npos, "/2") != 0)
      throw ParseError("half-integer literal must be \"k\" or \"k/2\": " + text);
    halved = true;
    pos = text.size();
  }
  long twice = halved ? numerator : 2 * numerator;
  if (negative) twice = -twice;
  return HalfInteger::from_twice(static_cast<int>(twice));
}

}  // namespace exlorentz
