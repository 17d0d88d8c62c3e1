#ifndef ALGDENS_ERRORS_HPP
#define ALGDENS_ERRORS_HPP

#include <stdexcept>

namespace algdens {

/// Bad arguments at an operation boundary: zero polynomial, non-primitive
/// input where a primitive one is required, out-of-range bounds, malformed
/// polynomial text.
class InvalidInput : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Degree exceeds the configured irreducibility-search cap; the operation
/// refuses rather than silently degrading.
class UnsupportedDegree : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

/// A divisibility or monicity guaranteed by a theorem failed at runtime.
/// Always an implementation bug, never a data error.
class TheoremViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// A class scan was requested for a rational number (degree 1); such a
/// class contains infinitely many members.
class InfiniteClass : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

} // namespace algdens

#endif
