#pragma once

#include <stdexcept>
#include <string>

namespace galint {

// Malformed input: bad expressions, missing keys, dimension mismatches,
// violated preconditions. The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A well-formed request outside the supported scope (base field, pole order).
// The CLI maps this to exit code 2.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An identity that must hold by construction failed. Signals a bug upstream.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace galint
