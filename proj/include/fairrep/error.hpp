#pragma once

#include <stdexcept>
#include <string>

namespace fairrep {

// Malformed input: bad file syntax, precondition violated by the caller.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The instance admits no solution (an empty family member, an
// invalid system of representatives).
class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A guarantee that should hold by construction did not. Always a bug.
class DefectError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fairrep
