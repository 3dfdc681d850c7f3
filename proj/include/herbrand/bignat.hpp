// ═══════════════════════════════════════════════════════════════════════════
// bignat.hpp — arbitrary-precision natural numbers
//
// All code/size/hierarchy arithmetic is exact.  GMP's mpz_class carries the
// arithmetic; the alias marks the intent (values are never negative).
// ═══════════════════════════════════════════════════════════════════════════
#pragma once

#include <gmpxx.h>

namespace herbrand {

using BigNat = mpz_class;

/// Number of binary digits of n (0 for 0); log₂ n rounded down is
/// bit_length(n) - 1 for n ≥ 1.
inline std::size_t bit_length(const BigNat& n) {
  return n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
}

}  // namespace herbrand
