// ═══════════════════════════════════════════════════════════════════════════
// normalize.hpp — rectified negation normal form
//
// to_nnf pushes negation down to atoms, eliminating -> and <-> on the way
// (A <-> B expands to (~A | B) & (~B | A) before the descent, so both
// polarities of each side appear exactly once).  rectify renames bound
// variables left-to-right so that all quantified variables are pairwise
// distinct and distinct from every name with a free occurrence; the first
// binder of a name keeps it, later clashes get the smallest numeric suffix
// that is still unused within the formula.  to_rnnf composes the two.
//
// RnnfFormula is a checked wrapper: constructing one verifies the syntactic
// RNNF property, so downstream code (Skolemization) can rely on it.
// ═══════════════════════════════════════════════════════════════════════════
#pragma once

#include "herbrand/formula.hpp"

namespace herbrand {

/// Negation normal form: no Not/Implies/Iff nodes remain.
Formula to_nnf(const Formula& f);

/// True when f contains no Not/Implies/Iff (negation only via NegAtom).
bool is_nnf(const Formula& f);

/// Renames bound variables apart (from each other and from anything with a
/// free occurrence).  Works on any formula; idempotent.
Formula rectify(const Formula& f);

/// True when all binders bind pairwise distinct names, none of which occurs
/// outside its binder's body.
bool is_rectified(const Formula& f);

/// A formula known to be in rectified negation normal form.
class RnnfFormula {
 public:
  /// Checks the property; throws std::invalid_argument when it fails.
  static RnnfFormula check(Formula f);

  const Formula& formula() const { return f_; }

 private:
  explicit RnnfFormula(Formula f) : f_(std::move(f)) {}
  Formula f_;
};

/// rectify(to_nnf(f)), wrapped as checked RNNF.
RnnfFormula to_rnnf(const Formula& f);

}  // namespace herbrand
