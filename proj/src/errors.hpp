#pragma once

#include <stdexcept>
#include <string>

namespace heunspec {

// Working precision could not support the requested computation.
// suggested_digits carries an actionable lower bound for a retry.
class precision_error : public std::runtime_error {
 public:
  precision_error(const std::string& what, unsigned suggested)
      : std::runtime_error(what), suggested_digits(suggested) {}
  unsigned suggested_digits;
};

// A verification step failed (monotonicity, boundary insensitivity,
// overlay uniqueness, ...). Distinct from invalid arguments.
class check_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace heunspec
