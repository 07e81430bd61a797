#pragma once

#include <stdexcept>
#include <string>

namespace ncploc {

// Raised when an operation would exceed a configured size/enumeration budget.
// CLI maps this to exit code 2.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ncploc
