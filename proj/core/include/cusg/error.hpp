#pragma once

#include <stdexcept>
#include <string>

namespace cusg {

// Malformed input or a violated precondition. Never used for mathematical failures,
// which are reported through Verdict.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cusg
