#pragma once

#include <stdexcept>

namespace jt {

/// A quantity that must be an integer came out fractional. Only an
/// implementation bug can raise this.
struct integrality_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// Internal cross-check failed (e.g. a lambda sequence not summing to mn).
struct consistency_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace jt
