// ═══════════════════════════════════════════════════════════════════════════
// evaluation.hpp — atoms over a term set, evaluations, and the search for
// theory-evaluations
//
// Fix a finite set Λ of ground terms.  The atoms over Λ are all R(t₁,…,tₙ)
// with R a signature predicate and every tᵢ a member of Λ; for the arithmetic
// signature that is {t = s, t <= s : t, s ∈ Λ}, i.e. 2·|Λ|² atoms.  An
// Evaluation is a total 0/1 assignment on that table subject to
//
//   (1) p[t = t] = 1 for every member t, and
//   (2) if p[t = s] = 1 then p[a] = p[b] whenever atoms a, b of the table
//       differ by replacing one occurrence of t by s (at any depth), for
//       members t, s,
//
// plus the induced function congruence between members of Λ.  find_evaluation
// searches for an evaluation satisfying every Skolem instance of a theory
// available in Λ; it is a self-contained DPLL over the atom table with the
// congruence constraints grounded eagerly, and it produces a replayable core
// of clauses when no evaluation exists.  enumerate_all is the brute-force
// oracle for small tables, and standard_evaluation reads the assignment off
// the standard model ℕ.
// ═══════════════════════════════════════════════════════════════════════════
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "herbrand/errors.hpp"
#include "herbrand/formula.hpp"
#include "herbrand/signature.hpp"
#include "herbrand/skolem.hpp"
#include "herbrand/termset.hpp"

namespace herbrand {

// ── Atom table ──────────────────────────────────────────────────────────────

struct Atom {
  SymId pred;
  std::vector<TermId> args;
};

/// All atoms over Λ in a fixed deterministic order: predicates in signature
/// order, argument tuples in member-index lexicographic order.
class AtomTable {
 public:
  AtomTable(const TermSet& lambda, const Signature& sig);

  std::size_t size() const { return atoms_.size(); }
  const Atom& atom(std::size_t i) const { return atoms_[i]; }
  const TermSet& lambda() const { return lambda_; }
  const Signature& signature() const { return *sig_; }

  std::optional<std::size_t> index_of(SymId pred,
                                      const std::vector<TermId>& args) const;
  /// Index of an Atom/NegAtom node's underlying atom.
  std::optional<std::size_t> index_of(const Formula& literal) const;

  std::string atom_string(std::size_t i) const;

 private:
  TermSet lambda_;
  const Signature* sig_;
  std::vector<Atom> atoms_;
  std::unordered_map<TermId, std::size_t> member_ord_;
  std::vector<std::size_t> offsets_;  // block start per predicate
  std::vector<SymId> pred_ids_;
};

// ── Evaluations ─────────────────────────────────────────────────────────────

class Evaluation {
 public:
  Evaluation(std::shared_ptr<const AtomTable> table,
             std::vector<std::uint8_t> bits);

  const AtomTable& table() const { return *table_; }
  bool value(std::size_t atom_index) const { return bits_[atom_index] != 0; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  /// Value of a ground quantifier-free formula under the assignment (all
  /// connectives allowed).  Throws std::out_of_range if the formula mentions
  /// an atom outside the table.
  bool satisfies(const Formula& ground) const;

  /// Partition of Λ by the relation t ∼ s ⟺ p[t = s] = 1, classes and
  /// members in Λ order.
  std::vector<std::vector<TermId>> equivalence_classes() const;

 private:
  std::shared_ptr<const AtomTable> table_;
  std::vector<std::uint8_t> bits_;
};

/// Check reflexivity, single-replacement congruence, function congruence
/// within Λ, and symmetry/transitivity of ∼.  Returns human-readable
/// descriptions of every violation (empty means valid).
std::vector<std::string> evaluation_violations(const Evaluation& p);

// ── Theory-evaluation search ────────────────────────────────────────────────

struct LabeledFormula {
  std::string label;
  Formula formula;
};

struct SolverConfig {
  std::uint64_t seed = 0;             // 0 = atom-table order
  std::size_t max_decisions = 1u << 24;
  std::size_t max_clauses = 1u << 23;
  std::size_t exhaustive_atom_limit = 24;  // enumerate_all guard
};

struct Clause {
  // Literal encoding: +(i+1) for atom i true, -(i+1) for atom i false.
  std::vector<std::int32_t> lits;
  enum class Origin : std::uint8_t {
    Reflexivity,
    Replacement,
    Symmetry,
    Transitivity,
    FunctionCongruence,
    Instance,
  } origin;
  std::uint32_t instance = 0;  // valid when origin == Instance
};

struct InstanceInfo {
  std::string label;                               // source formula label
  std::vector<std::pair<SymId, TermId>> subst;     // free var → ground term
  Formula ground;
};

struct SearchStats {
  std::size_t atoms = 0;
  std::size_t clauses = 0;
  std::size_t decisions = 0;
  std::size_t propagations = 0;
  std::size_t conflicts = 0;
};

/// Unsatisfiable core: a subset of the generated clauses whose conjunction
/// admits no assignment.  `lines` is the deterministic human-readable form.
struct Certificate {
  std::vector<Clause> core;
  std::vector<std::string> lines;
  std::vector<std::size_t> atoms;  // sorted atom indices mentioned by core
};

struct EvalOutcome {
  bool sat = false;
  std::optional<Evaluation> evaluation;     // set when sat
  std::optional<Certificate> certificate;   // set when unsat
  SearchStats stats;
  std::vector<InstanceInfo> instances;      // all available instances used
  std::shared_ptr<const AtomTable> atoms;
};

/// Search for a theory-evaluation on Λ: an evaluation satisfying every
/// available Skolem instance of every theory formula.  Exhaustive over the
/// finite atom table; throws ResourceLimitError when budgets are exceeded.
EvalOutcome find_evaluation(const std::vector<LabeledFormula>& theory,
                            const TermSet& lambda, SkolemRegistry& reg,
                            const Signature& sig, const SolverConfig& cfg = {});

/// Brute-force oracle: every assignment over the atom table that is a valid
/// Evaluation and satisfies all available instances.  Requires the table to
/// be within cfg.exhaustive_atom_limit atoms; constraint semantics are
/// checked directly (not via the solver's clauses).
std::vector<Evaluation> enumerate_all(const std::vector<LabeledFormula>& theory,
                                      const TermSet& lambda,
                                      SkolemRegistry& reg, const Signature& sig,
                                      const SolverConfig& cfg = {});

/// Replay an unsatisfiability certificate against its atom table: verifies by
/// exhaustive search over the core's atoms (if few) or a fresh propositional
/// search restricted to the core that the core clauses admit no assignment.
bool replay_certificate(const Certificate& cert, std::size_t num_atoms);

// ── Standard model ──────────────────────────────────────────────────────────

/// Interprets function symbols over ℕ.  The arithmetic base and the symbols
/// 𝔭 (predecessor), 𝔥 (truncated difference: 𝔥(x,y) = y−x when x ≤ y, else
/// 0) and 𝔮 (squaring) are built in; other symbols (e.g. fresh constants)
/// must be given explicitly.
struct StandardInterpretation {
  using Fn = std::function<mpz_class(const std::vector<mpz_class>&)>;
  std::map<std::string, Fn, std::less<>> functions;

  static StandardInterpretation builtins();
  void set_constant(std::string name, mpz_class value);
};

struct MissingInterpretationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The evaluation induced by computing every member of Λ in ℕ: p[t = s] = 1
/// iff the values coincide, p[t <= s] = 1 iff the values are ordered.
Evaluation standard_evaluation(const TermSet& lambda,
                               const StandardInterpretation& interp,
                               const Signature& sig);

}  // namespace herbrand
