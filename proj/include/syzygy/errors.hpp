#pragma once

#include <stdexcept>
#include <string>

namespace syz {

/// Malformed input: bad files, bad parameters, invalid gluing data.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A model failed an internal consistency check (cohomology vanishing,
/// non-representable product, malformed strand).
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation would exceed the configured memory cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No model family is available for the requested parameters.
class IndeterminateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace syz
