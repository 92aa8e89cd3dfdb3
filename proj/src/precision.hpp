#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace heunspec {

// Working real type: MPFR-backed, precision selectable at runtime.
using Real = boost::multiprecision::mpfr_float;
// Exact rationals for polynomial construction and root isolation.
using Rational = boost::multiprecision::mpq_rational;

constexpr unsigned kDefaultDigits = 50;

// Sets the working decimal precision for the enclosing scope and restores
// the previous value on exit. Every computation entry point opens one of
// these before constructing any Real.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned digits)
      : previous_(Real::default_precision()) {
    Real::default_precision(digits ? digits : kDefaultDigits);
  }
  ~ScopedPrecision() { Real::default_precision(previous_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned previous_;
};

// Correctly rounded decimal rendering with exactly `sig_digits` significant
// digits. Uses plain fixed notation for moderate exponents (the style of the
// reference tables), scientific otherwise.
std::string format_significant(const Real& x, int sig_digits);

// Parses a coupling-strength token: "sqrtN" / "-sqrtN" / "+sqrtN" for exact
// square roots, "p/q" rationals, or a decimal literal. Evaluated at the
// current working precision. Throws std::invalid_argument on bad input.
Real parse_alpha_token(const std::string& token);

// Rounds a rational to the current working precision. Boost's direct
// rational-to-mpfr conversion tries to preserve the full rational and
// allocates precision proportional to its bit size; this stays bounded.
Real to_real(const Rational& q);

// True when `value` rounds to the decimal string `printed` at the printed
// number of significant digits (half-ulp criterion on the printed digits).
bool matches_printed(const Real& value, const std::string& printed);

}  // namespace heunspec
