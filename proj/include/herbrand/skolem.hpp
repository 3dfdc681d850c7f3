// ═══════════════════════════════════════════════════════════════════════════
// skolem.hpp — non-prenex Skolemization and Skolem-instance enumeration
//
// Skolemization maps an RNNF formula φ to φ^S by induction: atoms and
// connectives are transparent, ∀ stays, and (∃x ψ)^S substitutes 𝔣(ȳ) for x
// in ψ^S, where 𝔣 is the registry symbol for the class of ∃x ψ and ȳ are
// the free variables of ∃x ψ in first-occurrence order.  φ^Sk then strips
// the remaining universal quantifiers, leaving an open quantifier-free
// formula whose free variables are implicitly universal.
//
// The registry keys symbols by a canonical form that numbers bound
// variables by binder depth and free variables by first occurrence, i.e.
// two existential subformulas share a symbol exactly when they are equal up
// to any variable renaming.  That is what makes one binary symbol serve
// ∃z(z + x = y) wherever the pattern recurs under different variable names.
// Symbols are auto-named 𝔣₀, 𝔣₁, …; presets pin human names (𝔭, 𝔥, 𝔮, 𝔠)
// before Skolemizing, and goal naming switches new constants to 𝔠, 𝔠₂, ….
//
// A Skolem instance of φ substitutes ground terms for the free variables of
// φ^Sk.  The instance is available in a term set Λ when every atom side
// (each argument of each atomic subformula) is a member of Λ; the
// substituted values themselves only need to come from the subterm closure
// of Λ.
// ═══════════════════════════════════════════════════════════════════════════
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "herbrand/formula.hpp"
#include "herbrand/normalize.hpp"
#include "herbrand/signature.hpp"
#include "herbrand/termset.hpp"

namespace herbrand {

struct SkolemSymbol {
  std::string name;
  int arity;
  Formula source;  // representative existential formula
  std::string key; // canonical form the registry keys on
};

class SkolemRegistry : public SymbolArities {
 public:
  /// Symbol for the class of `existential` (an Exists formula), creating
  /// and naming it when new.
  const SkolemSymbol& symbol_for(const Formula& existential,
                                 const Scope& scope);

  /// Pre-assigns `name` to the class of `existential`.  Throws when the
  /// class already carries a different name or the name is taken.
  void pin(const Formula& existential, std::string_view name,
           const Scope& scope);

  /// While enabled, newly created 0-ary symbols are named 𝔠, 𝔠₂, … instead
  /// of 𝔣ₙ (used for negated goals, matching the usual display).
  void set_goal_naming(bool on) { goal_naming_ = on; }

  const std::vector<SkolemSymbol>& symbols() const { return symbols_; }
  const SkolemSymbol* find(std::string_view name) const;

  std::optional<int> arity_of(std::string_view name) const override;

 private:
  std::string next_name(int arity);

  std::vector<SkolemSymbol> symbols_;
  std::map<std::string, std::size_t, std::less<>> by_key_;
  std::map<std::string, std::size_t, std::less<>> by_name_;
  bool goal_naming_ = false;
  int next_f_ = 0;
  int next_c_ = 0;
};

/// Canonical form of a formula with bound variables numbered by binder
/// depth and free variables by first occurrence.  Equal strings ⟺ equal up
/// to variable renaming.
std::string canonical_form(const Formula& f, const Scope& scope);

// ── Skolemization ───────────────────────────────────────────────────────────

struct Skolemization {
  Formula rnnf;     // rectified NNF of the input
  Formula with_foralls;  // φ^S: existentials replaced, universals intact
  Formula matrix;   // φ^Sk: universals stripped
  std::vector<SymId> universals;  // stripped variables in binder order
};

/// φ^S on an already-normalized formula.
Formula skolem_s(const RnnfFormula& f, SkolemRegistry& reg,
                 const Signature& sig);

/// to_rnnf + skolem_s + strip.
Skolemization skolemize(const Formula& f, SkolemRegistry& reg,
                        const Signature& sig);

// ── Instances ───────────────────────────────────────────────────────────────

struct SkolemInstance {
  Formula source;                                // the theory formula
  std::vector<std::pair<SymId, TermId>> subst;   // free var → ground term
  Formula ground;                                // σ(φ^Sk)
};

/// All Skolem instances of f available in lambda, in deterministic order
/// (variables in free-variable order, candidate terms in subterm-closure
/// order, substitutions lexicographic).
std::vector<SkolemInstance> available_instances(const Formula& f,
                                                const TermSet& lambda,
                                                SkolemRegistry& reg,
                                                const Signature& sig);

/// Every maximal term (atom side) of a ground formula is a member of Λ?
bool atom_sides_in(const Formula& ground, const TermSet& lambda);

/// Collects the atom side terms of a formula in left-to-right order.
void collect_atom_sides(const Formula& f, std::vector<TermId>& out);

}  // namespace herbrand
