// ═══════════════════════════════════════════════════════════════════════════
// theories.hpp — arithmetic theory presets, induction instances, and the
// term families used by the squaring argument
//
// preset_q returns the eight axioms of Robinson arithmetic Q over the
// signature {0, S, +, *, <=, =} and pins the two customary Skolem names:
// 𝔭 for the predecessor witness of ∃y(x = Sy), 𝔥 for the difference
// witness of ∃z(z + x = y).
//
// Bounded (Δ₀) formulas are kept desugared: a bounded quantifier is the
// shape ∀x(x ≤ t → …) or ∃x(x ≤ t ∧ …) with x not occurring in the bound
// t.  The recognizer is purely syntactic; it accepts exactly that shape
// and makes no attempt at equivalence reasoning.
//
// induction_instance(θ, x) builds θ(0) ∧ ∀x[θ(x) → θ(Sx)] → ∀xθ(x), the
// induction axiom for a bounded θ whose only free variable is x.
//
// Term families:
//   numerals(n)   {0, S0, SS0, …, n̲}                      (n̲ denotes n)
//   z_terms(n)    {𝗓₀, …, 𝗓ₙ}, 𝗓₀ = SS0, 𝗓ⱼ₊₁ = 𝔮(𝗓ⱼ)     (𝗓ⱼ denotes 2^2^j
//                 once an evaluation forces 𝔮 to behave as squaring)
//   upsilon()     the ten-term set {0, 0+0, 0·0, 𝔠, 𝔠·𝔠, 𝔠·𝔠+0, S𝔠, 𝔮𝔠,
//                 S𝔠·S𝔠, S𝔠·S𝔠+0}
// where 𝔮 is the Skolem function of θ(x) = ∃y(y ≤ x·x ∧ y = x·x) and 𝔠 is
// the Skolem constant of the normalized induction failure for that θ,
// ∃x(θ(x) ∧ ∀v(v ≰ Sx·Sx ∨ v ≠ Sx·Sx)).  The generators pin both names so
// a later Skolemization of the induction instance reuses them.
// ═══════════════════════════════════════════════════════════════════════════
#pragma once

#include <string>
#include <vector>

#include "herbrand/evaluation.hpp"
#include "herbrand/formula.hpp"
#include "herbrand/signature.hpp"
#include "herbrand/skolem.hpp"
#include "herbrand/termset.hpp"

namespace herbrand {

struct TheoryPreset {
  std::string name;
  std::vector<LabeledFormula> axioms;  // sentences, in display order
};

/// Robinson arithmetic Q (A1–A8); pins 𝔭 and 𝔥 in the registry.
TheoryPreset preset_q(SkolemRegistry& reg, const Signature& sig);

/// Exactly the desugared Δ₀ shape (see the header comment).
bool is_bounded(const Formula& f, const Scope& scope);

/// θ(0) ∧ ∀x[θ(x) → θ(Sx)] → ∀xθ(x).  Throws std::invalid_argument when
/// θ's free variables are not exactly {var} or θ is not bounded.
Formula induction_instance(const Formula& theta, SymId var,
                           const Scope& scope);
Formula induction_instance(const Formula& theta, std::string_view var,
                           const Scope& scope);

/// θ(x) = ∃y(y ≤ x·x ∧ y = x·x), with free variable x.
Formula square_theta(const Signature& sig);

/// Pins 𝔮 and 𝔠 (the squaring-θ Skolem names) without building any terms.
void pin_square_names(SkolemRegistry& reg, const Signature& sig);

/// {0̲, …, n̲} with 0̲ = 0 and (j+1)̲ = S(j̲).
TermSet numerals(int n);

/// {𝗓₀, …, 𝗓ₙ}; pins 𝔮.
TermSet z_terms(int n, SkolemRegistry& reg, const Signature& sig);

/// The ten-term set Υ; pins 𝔮 and 𝔠.
TermSet upsilon(SkolemRegistry& reg, const Signature& sig);

}  // namespace herbrand
