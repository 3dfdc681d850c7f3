// ═══════════════════════════════════════════════════════════════════════════
// errors.hpp — shared error types
// ═══════════════════════════════════════════════════════════════════════════
#pragma once

#include <stdexcept>

namespace herbrand {

/// A configured budget (clauses, decisions, bits) was exceeded.  Deliberately
/// distinct from a negative result: it decides nothing.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace herbrand
