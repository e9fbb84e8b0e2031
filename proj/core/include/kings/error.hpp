#pragma once

#include <stdexcept>

namespace kings {

// Raised for any precondition violation on caller-supplied data: bad
// indices, malformed documents, out-of-range parameters.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace kings
