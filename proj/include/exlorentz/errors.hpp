#pragma once

#include <stdexcept>

namespace exlorentz {

/// Base class for every error raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OverflowError : Error { using Error::Error; };
struct RadicandOverflow : Error { using Error::Error; };
struct NegativeRadicand : Error { using Error::Error; };
struct MultiTermInverse : Error { using Error::Error; };
struct DegreeMismatch : Error { using Error::Error; };
struct LambdaTooLarge : Error { using Error::Error; };
struct InvalidJ : Error { using Error::Error; };
struct DegenerateState : Error { using Error::Error; };
struct NonProportional : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct EigenvalueMismatch : Error { using Error::Error; };
struct IllConditioned : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace exlorentz
