#pragma once

#include <stdexcept>

namespace rs3 {

// Raised when a guaranteed internal invariant is violated, e.g. a decision
// certificate that the theory says cannot fail. The CLI maps this to exit
// code 3, ordinary std::invalid_argument (bad input, broken precondition)
// maps to exit code 2.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rs3
