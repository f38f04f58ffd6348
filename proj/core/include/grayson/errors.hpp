#pragma once

#include <stdexcept>
#include <string>

namespace grayson {

struct DimensionMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotPositiveDefiniteError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DependentFrameError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RankDeficientError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotSaturatedError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ContainmentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotStabilizingError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotUnimodularError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Enumeration could not be certified complete within the configured bounds.
// Callers must surface this; it is never converted into a silent best-effort
// answer.
struct UncertifiedEnumerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace grayson
