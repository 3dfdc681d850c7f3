// ═══════════════════════════════════════════════════════════════════════════
// formula.hpp — first-order formulas over interned terms
//
// Formulas are immutable shared trees.  Negation normal form is expressible
// directly: NegAtom is a first-class node kind, so "no negation except on
// atoms" is a syntactic property.  The factory `neg` folds negations of
// (neg)atoms into the dual kind immediately; a bare Not node therefore only
// ever wraps a composite formula.
//
// Two equalities are provided:
//   alpha_equal    — equal up to renaming of bound variables,
//   variant_equal  — additionally up to a bijective renaming of free
//                    variables (constants stay fixed; needs a Scope).
// ═══════════════════════════════════════════════════════════════════════════
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "herbrand/signature.hpp"
#include "herbrand/term.hpp"

namespace herbrand {

enum class FormulaKind : std::uint8_t {
  Atom,
  NegAtom,
  Not,
  And,
  Or,
  Implies,
  Iff,
  Forall,
  Exists,
};

class Formula;

struct FormulaNode {
  FormulaKind kind;
  SymId pred = 0;              // Atom / NegAtom
  std::vector<TermId> args;    // Atom / NegAtom
  SymId var = 0;               // Forall / Exists
  std::shared_ptr<const FormulaNode> a;  // unary child / left / body
  std::shared_ptr<const FormulaNode> b;  // right
};

/// Value wrapper around a shared immutable node.
class Formula {
 public:
  Formula() = default;
  explicit Formula(std::shared_ptr<const FormulaNode> node)
      : node_(std::move(node)) {}

  bool valid() const { return node_ != nullptr; }
  const FormulaNode& node() const { return *node_; }
  const std::shared_ptr<const FormulaNode>& ptr() const { return node_; }

  FormulaKind kind() const { return node_->kind; }
  Formula left() const { return Formula(node_->a); }
  Formula right() const { return Formula(node_->b); }
  Formula body() const { return Formula(node_->a); }

 private:
  std::shared_ptr<const FormulaNode> node_;
};

// ── Constructors ────────────────────────────────────────────────────────────

Formula atom(std::string_view pred, std::vector<TermId> args);
Formula atom(SymId pred, std::vector<TermId> args);
Formula neg_atom(SymId pred, std::vector<TermId> args);
/// Negation; ~Atom and ~NegAtom fold into the dual atom kind.
Formula neg(Formula f);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula iff(Formula a, Formula b);
Formula forall(SymId var, Formula body);
Formula forall(std::string_view var, Formula body);
Formula exists(SymId var, Formula body);
Formula exists(std::string_view var, Formula body);

// ── Queries ─────────────────────────────────────────────────────────────────

bool structural_equal(const Formula& f, const Formula& g);
bool alpha_equal(const Formula& f, const Formula& g);
bool variant_equal(const Formula& f, const Formula& g, const Scope& scope);

/// Free variables in first-occurrence order.
std::vector<SymId> free_vars(const Formula& f, const Scope& scope);
bool is_sentence(const Formula& f, const Scope& scope);

/// True when f is quantifier-free and every atom argument is ground.
bool is_ground(const Formula& f, const Scope& scope);

/// Capture-naive substitution of free occurrences of `var` by `value`; safe
/// whenever no binder in f binds a variable of `value` on a path containing
/// a free occurrence of `var` (rectified formulas always qualify).
Formula substitute_free(const Formula& f, SymId var, TermId value);
Formula substitute_free(const Formula& f,
                        const std::vector<std::pair<SymId, TermId>>& map);

/// All symbol names occurring anywhere in f (heads, predicates, binders).
void collect_names(const Formula& f, std::vector<SymId>& out);

// ── Printing ────────────────────────────────────────────────────────────────
//
// Concrete syntax:  ~F | F & F | F | F | F -> F | F <-> F |
//                   forall x. F | exists x. F | t = t | t <= t
// Precedence ~ > & > | > -> > <->; & and | associate left, -> and <-> right;
// quantifier bodies extend as far right as possible.

std::string to_string(const Formula& f);

}  // namespace herbrand
