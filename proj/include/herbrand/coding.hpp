// ═══════════════════════════════════════════════════════════════════════════
// coding.hpp — a concrete efficient Gödel coding with measured size bounds
//
// Every object serializes to a canonical byte string: a kind tag, a varint
// payload length, and the payload, whose fields are themselves such strings
// (so decoding is unambiguous and the coding is injective per kind by
// construction).  The code of an object is its byte string read as a binary
// number with a leading 1 — hence numeric order on codes is (length,
// lexicographic) order on the strings, and sets can serialize their elements
// in ascending code order to make the set code order-independent.
//
// The classical size bounds — |A| ≤ log₂⌈A⌉, ⌈A∪B⌉ ≤ C·⌈A⌉·⌈B⌉, and the
// 𝒫-relation ⌈x⌉ ≤ yⁿ + n — are not assumed but measured: PBoundCheck fits
// the least exponent n that covers a sample and reports it, falling back to
// bit-length comparisons when yⁿ would be astronomically wide.
// ═══════════════════════════════════════════════════════════════════════════
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "herbrand/bignat.hpp"
#include "herbrand/evaluation.hpp"
#include "herbrand/formula.hpp"
#include "herbrand/term.hpp"
#include "herbrand/termset.hpp"

namespace herbrand {

enum class CodeKind : std::uint8_t {
  Symbol = 1,
  Term = 2,
  Formula = 3,
  Set = 4,
  Pair = 5,
  Evaluation = 6,
};

struct GodelCode {
  BigNat value;
  CodeKind kind;
};

inline bool operator==(const GodelCode& a, const GodelCode& b) {
  return a.kind == b.kind && a.value == b.value;
}
inline bool operator<(const GodelCode& a, const GodelCode& b) {
  return a.value != b.value ? a.value < b.value : a.kind < b.kind;
}

// ── Codes ───────────────────────────────────────────────────────────────────

GodelCode code_symbol(std::string_view name);
GodelCode code_term(TermId t);
GodelCode code_formula(const Formula& f);
GodelCode code_pair(const GodelCode& a, const GodelCode& b);

/// Code of a finite set of coded objects.  Elements are deduplicated and
/// serialized in ascending code order, so the result does not depend on the
/// order (or multiplicity) of the input.
GodelCode code_set(const std::vector<GodelCode>& elements);

/// code_set over the member terms.
GodelCode code_term_set(const TermSet& lambda);

/// Code of a total evaluation as the set of (atom, bit) pairs.  Throws
/// std::invalid_argument for an empty atom table (evaluations are total
/// assignments on a nonempty table).
GodelCode code_evaluation(const Evaluation& p);

/// Canonical byte string of a code (the inverse of reading bytes as a
/// leading-1 binary number).  Throws std::invalid_argument if the value is
/// not of that shape (bit length ≢ 1 mod 8).
std::vector<std::uint8_t> code_bytes(const GodelCode& c);

// ── Measured bounds ─────────────────────────────────────────────────────────

/// Least integer C with ⌈A∪B⌉ ≤ C·⌈A⌉·⌈B⌉ for this sample (a measurement of
/// the union-bound constant; the classical claim is C ≤ 64).
BigNat union_constant(const std::vector<GodelCode>& a,
                      const std::vector<GodelCode>& b);

/// Fit of the 𝒫-relation code ≤ yⁿ + n over a sample of (y, code) pairs.
struct PBoundCheck {
  std::vector<std::pair<BigNat, BigNat>> samples;  // (y, observed code)
  int exponent = 0;   // least n covering every sample (0 when none fits)
  bool holds = false; // some n ≤ the search limit covers the sample
  bool partial = false;  // at least one comparison used bit lengths only
  std::string note;
};

/// Least n ≤ max_exponent with code ≤ yⁿ + n for every sample.  Exact while
/// yⁿ stays within a bit budget; beyond it the check compares bit lengths
/// (sound for acceptance, conservative for rejection) and flags `partial`.
PBoundCheck fit_p_bound(std::vector<std::pair<BigNat, BigNat>> samples,
                        int max_exponent = 64);

/// Measures ⌈Λ^⟨j⟩⌉ against (⌈Λ⌉)^{|Λ|^{(j+1)!}} for j = 0..n over the base
/// arithmetic signature.  Requires 0 ≤ n ≤ 3 and |Λ| ≥ 2 (the factorial
/// exponent explodes beyond that, and a singleton Λ starves the base y).
PBoundCheck check_universe_code_bound(const TermSet& lambda, int n);

/// Measures ⌈Aᵐ⌉ against ⌈A⌉^{|A|^j} for j = 1..m, tuples encoded as nested
/// pairs.  Requires 1 ≤ m ≤ 3 and a nonempty A.
PBoundCheck cartesian_power_bound(const std::vector<GodelCode>& a, int m);

}  // namespace herbrand
