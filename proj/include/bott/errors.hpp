#pragma once

#include <stdexcept>
#include <string>

namespace bott {

/// Rejected input: a violated invariant of a Cartan matrix, word, divisor or job.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact arithmetic left the int64 range. Raised instead of wrapping.
class OverflowError : public InputError {
 public:
  using InputError::InputError;
};

/// Two independent computations of the same quantity disagreed. Always a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bott
