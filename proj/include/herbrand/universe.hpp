// ═══════════════════════════════════════════════════════════════════════════
// universe.hpp — term-universe closure, the prover loop, and the quotient
// model read off an evaluation
//
// Λ^⟨0⟩ = Λ, and Λ^⟨k+1⟩ adds every application of a base function symbol to
// members of Λ^⟨k⟩, plus applications of the registered Skolem symbols.  The
// general definition would admit Skolem symbols of arbitrary formulas of
// small code; enumerating those is infeasible, so the closure applies only
// symbols already in the registry — optionally gated by the code of their
// source formula — and that restriction is a known limitation of the prover,
// not of the notion.  Levels deduplicate through hash-consing; per-level and
// code budgets truncate gracefully with a flag rather than failing.
//
// herbrand_prove is the semi-decision loop: Skolemize the axioms and the
// negated goal, seed Λ with their ground terms (plus 0), and alternate
// closure steps with evaluation searches.  An unsatisfiable stage proves the
// goal (and carries a replayable certificate); a satisfiable final stage
// reports the evaluation found; running out of budget decides nothing.
//
// herbrand_model quotients Λ by t ∼ s ⟺ p[t = s] = 1 and reads function and
// relation tables off representatives.  For a valid evaluation the tables
// cannot depend on the representative choice; a dependence is reported as an
// error since it signals a defect in the evaluation, not in the input.
// ═══════════════════════════════════════════════════════════════════════════
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "herbrand/bignat.hpp"
#include "herbrand/evaluation.hpp"
#include "herbrand/skolem.hpp"
#include "herbrand/termset.hpp"

namespace herbrand {

struct UniverseConfig {
  int max_depth = 2;                  // prover stages (closure applications)
  std::size_t level_budget = 200000;  // new members admitted per level
  std::optional<BigNat> code_budget;  // admit only terms with code ≤ this
  // When set, a Skolem symbol participates in the step Λ^⟨k⟩ → Λ^⟨k+1⟩ only
  // if its source formula's code is ≤ k.  Realistic codes are astronomical,
  // so this effectively defers Skolem symbols to astronomically late levels;
  // the default applies every registry symbol at every level.
  bool skolem_code_threshold = false;
  SolverConfig solver;                // per-stage search budgets
};

// ── Closure ─────────────────────────────────────────────────────────────────

struct ClosureResult {
  TermSet set;                           // Λ^⟨k⟩, members in level order
  std::vector<std::size_t> level_sizes;  // |Λ^⟨0⟩|, …, |Λ^⟨k⟩|
  bool truncated = false;                // some level hit a budget

  /// Λ^⟨j⟩ is the prefix of `set.members()` of length level_sizes[j].
  TermSet level(std::size_t j) const;
};

/// Λ^⟨k⟩ per the inductive definition, with Skolem applications restricted
/// to `reg`'s symbols (pass nullptr for the base signature only).  Throws
/// std::invalid_argument for k < 0 or a non-positive budget.
ClosureResult close_universe(const TermSet& lambda, int k,
                             const Signature& sig, const SkolemRegistry* reg,
                             const UniverseConfig& cfg = {});

// ── Prover loop ─────────────────────────────────────────────────────────────

enum class ProveStatus {
  Proved,           // some stage admitted no evaluation (certificate)
  EvaluationFound,  // last stage satisfiable — not a refutation of the goal
  BudgetExhausted,  // a stage exceeded its search budget; decides nothing
};

struct ProveResult {
  ProveStatus status = ProveStatus::BudgetExhausted;
  int stage = -1;                         // stage of the decisive search
  std::vector<std::size_t> lambda_sizes;  // |Λ| per completed stage
  TermSet lambda;                         // Λ of the decisive search
  std::optional<EvalOutcome> outcome;     // that search's full outcome
  bool closure_truncated = false;         // some closure level was capped
  std::string note;                       // budget diagnostics, if any
};

/// Semi-decision for theory ⊢ goal by Herbrand provability.  Skolemizes
/// theory ∪ {¬goal} (the goal's fresh constants take the 𝔠-naming), seeds Λ
/// with every ground subterm of the Skolemized set plus 0, and runs
/// cfg.max_depth closure/search stages.  With `lambda_override` the search
/// runs once, directly on the given term set.  Throws std::invalid_argument
/// if goal is not a sentence.
ProveResult herbrand_prove(const std::vector<LabeledFormula>& theory,
                           const Formula& goal, SkolemRegistry& reg,
                           const Signature& sig, const UniverseConfig& cfg = {},
                           const std::optional<TermSet>& lambda_override = {});

// ── Quotient model ──────────────────────────────────────────────────────────

struct QuotientStructure {
  std::vector<std::vector<TermId>> classes;          // partition of Λ, Λ-order
  std::unordered_map<TermId, std::size_t> class_of;  // member → class index

  // Function tables are partial: a tuple of classes is mapped only when some
  // representative application lands inside Λ.  Relation tables are total on
  // member tuples.  Keys are class-index tuples.
  std::map<std::string, std::map<std::vector<std::size_t>, std::size_t>>
      functions;
  std::map<std::string, std::map<std::vector<std::size_t>, bool>> relations;
};

/// Quotient of Λ by ∼_p with function/relation tables read off p.  Throws
/// std::invalid_argument when p is not an evaluation on lambda, and
/// std::logic_error when a table value depends on the representative choice
/// (possible only for an invalid evaluation).
QuotientStructure herbrand_model(const TermSet& lambda, const Evaluation& p,
                                 const Signature& sig,
                                 const SkolemRegistry* reg);

/// Truth of a ground quantifier-free formula in the quotient, via the class
/// tables alone (an independent path from Evaluation::satisfies).  Throws
/// std::out_of_range when an argument term is not a member of the quotiented
/// Λ.
bool quotient_satisfies(const QuotientStructure& q, const Formula& ground);

}  // namespace herbrand
