#pragma once

#include <stdexcept>
#include <string>

namespace star3 {

/// Base class for all errors raised by this library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An argument is outside the operation's documented domain.
struct invalid_parameter : error {
  using error::error;
};

/// The instance is larger than the exhaustive mode of an operation supports.
struct size_limit : error {
  using error::error;
};

/// An internal self-check failed (e.g. a construction's edge count disagrees
/// with its closed-form value).
struct consistency_error : error {
  using error::error;
};

/// A documented precondition on the input object does not hold.
struct precondition_error : error {
  using error::error;
};

/// Malformed input text (graph/coloring files, tables).
struct parse_error : error {
  using error::error;
};

}  // namespace star3
