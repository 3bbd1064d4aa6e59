#pragma once

#include <stdexcept>
#include <string>

namespace bandposet {

/// Malformed or out-of-contract input supplied by a caller.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed object failed a check that theory says cannot fail.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bandposet
