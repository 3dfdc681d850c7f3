// ═══════════════════════════════════════════════════════════════════════════
// hierarchy.hpp — exp/log towers, the ω_m growth hierarchy, and constructive
// checks of its separation inequalities
//
// log is the ceiling variant, log x = min{y | x ≤ 2^y}, so the sandwich
// exp(log x − 1) < x ≤ exp(log x) holds and log/exp form an exact adjunction:
// x ≤ 2^a ⟺ log x ≤ a (hence x > 2^a ⟺ log x > a).  That adjunction is load-
// bearing: ω_m values are exp-towers far beyond any feasible width, but any
// comparison of the form x ≶ exp^k(t) peels to log^k x ≶ t exactly, which is
// how the lemma checks and witness verifications stay both exact and cheap.
//
// ω_m(x) = exp^m((log^m x)²), equivalently ω₀(x) = x² with ω_{n+1}(x) =
// exp(ω_n(log x)); ω₋₁(x) = 2x.  Iterates close over: ω_m^N(x) =
// exp^m((log^m x)^{2^N}).  Both defining forms are implemented separately and
// cross-checked by tests, never trusted singly.
//
// Every BigNat is capped by a bit budget (default 2^20 bits); exceeding it
// raises ResourceLimitError rather than silently truncating, because ω₂ of
// modest inputs is already astronomically wide.
// ═══════════════════════════════════════════════════════════════════════════
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "herbrand/bignat.hpp"
#include "herbrand/errors.hpp"

namespace herbrand {

inline constexpr std::size_t kDefaultBitBudget = std::size_t{1} << 20;

// ── exp / log towers ────────────────────────────────────────────────────────

/// 2^x.  Throws ResourceLimitError when the result would exceed the budget.
BigNat exp_(const BigNat& x, std::size_t bit_budget = kDefaultBitBudget);

/// Ceiling log: min{y | x ≤ 2^y}.  Throws std::domain_error for x = 0.
BigNat log_(const BigNat& x);

/// k-fold iterates; exp_iter(0, x) = log_iter(0, x) = x.
BigNat exp_iter(int k, const BigNat& x,
                std::size_t bit_budget = kDefaultBitBudget);
BigNat log_iter(int k, const BigNat& x);

// ── The ω hierarchy ─────────────────────────────────────────────────────────

/// ω_m by the inductive definition (ω₋₁ = doubling, ω₀ = squaring,
/// ω_{n+1}(x) = exp(ω_n(log x))).  Requires m ≥ −1, and x ≥ 1 when m ≥ 1.
BigNat omega(int m, const BigNat& x, std::size_t bit_budget = kDefaultBitBudget);

/// ω_m by the closed form exp^m((log^m x)²); must agree with omega().
BigNat omega_closed(int m, const BigNat& x,
                    std::size_t bit_budget = kDefaultBitBudget);

/// N-fold iterate ω_m^N by the closed forms ω₋₁^N(x) = 2^N·x, ω₀^N(x) =
/// x^{2^N}, ω_m^N(x) = exp^m((log^m x)^{2^N}); N ≥ 1.
BigNat omega_iter(int m, int N, const BigNat& x,
                  std::size_t bit_budget = kDefaultBitBudget);

/// ϖ_n(x): the least y with ω_n(y) ≥ x, by doubling plus binary search
/// (values where ω_n is undefined count as too small).  Requires x ≥ 1.
BigNat varpi(int n, const BigNat& x,
             std::size_t bit_budget = kDefaultBitBudget);

// ── Lemma checks ────────────────────────────────────────────────────────────

struct LemmaSample {
  BigNat x;
  bool holds = false;
  bool direct = false;  // compared by explicit values, not via the log route
};

struct LemmaReport {
  int lemma = 0;
  int m = 0;
  int big_n = 0;  // the N parameter
  std::vector<LemmaSample> samples;
  std::vector<BigNat> violations;                    // x of failed samples
  std::vector<std::pair<BigNat, BigNat>> witnesses;  // lemma 2: x → y
  bool partial = false;  // grid trimmed by the bit budget
  std::string note;
};

/// Checks ω_m^N(x) < ω_{m+1}(x) for sampled x > exp^{m+2}(N).  Requires
/// m ≥ 0 and N > 2.  Samples: the two smallest admissible x, `samples`
/// seeded pseudo-random mid-width values, and one near-budget value.  When
/// even the threshold exceeds the budget the report is partial and empty.
LemmaReport check_lemma1(int m, int N, int samples, std::uint64_t seed = 1,
                         std::size_t bit_budget = kDefaultBitBudget);

/// The constructive witness y (≤ x) with ω_m^N(y) < x ≤ ω_{m+1}(y), for
/// m ≥ −1, N ≥ 1, x > exp^{m+2}(4N+4).  Base case m = −1: the least y with
/// y² ≥ x; higher m: exp of the witness for (m−1, log x).  Both inequalities
/// and y ≤ x are re-verified before returning (std::logic_error on failure —
/// that would be a construction bug, not bad input).  Throws
/// std::invalid_argument when x is below the threshold.
BigNat find_lemma2_witness(int m, int N, const BigNat& x,
                           std::size_t bit_budget = kDefaultBitBudget);

/// Sampled witness table for the above, analogous to check_lemma1.
LemmaReport check_lemma2(int m, int N, int samples, std::uint64_t seed = 1,
                         std::size_t bit_budget = kDefaultBitBudget);

}  // namespace herbrand
