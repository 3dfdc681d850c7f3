#include "herbrand/theories.hpp"

#include <stdexcept>

#include "herbrand/parser.hpp"

namespace herbrand {

namespace {

/// Does the variable occur in the term?
bool occurs(SymId var, TermId t) {
  for (TermId s : subterms(t))
    if (term(s).head == var && term(s).args.empty()) return true;
  return false;
}

/// Is f the atom `var <= t` with var not occurring in t?
bool is_bound_atom(const Formula& f, SymId var) {
  if (f.kind() != FormulaKind::Atom) return false;
  const FormulaNode& n = f.node();
  if (symbol_name(n.pred) != "<=" || n.args.size() != 2) return false;
  const TermNode& lhs = term(n.args[0]);
  return lhs.head == var && lhs.args.empty() && !occurs(var, n.args[1]);
}

}  // namespace

TheoryPreset preset_q(SkolemRegistry& reg, const Signature& sig) {
  Scope scope{&sig, &reg};
  reg.pin(parse_formula("exists y. x = S(y)", scope), "𝔭", scope);
  reg.pin(parse_formula("exists z. (z + x) = y", scope), "𝔥", scope);

  static const std::pair<const char*, const char*> kAxioms[] = {
      {"A1", "forall x. ~ S(x) = 0"},
      {"A2", "forall x. forall y. (S(x) = S(y) -> x = y)"},
      {"A3", "forall x. (~ x = 0 -> exists y. x = S(y))"},
      {"A4", "forall x. forall y. (x <= y <-> exists z. (z + x) = y)"},
      {"A5", "forall x. (x + 0) = x"},
      {"A6", "forall x. forall y. (x + S(y)) = S(x + y)"},
      {"A7", "forall x. (x * 0) = 0"},
      {"A8", "forall x. forall y. (x * S(y)) = ((x * y) + x)"},
  };

  TheoryPreset q;
  q.name = "q";
  for (auto& [label, text] : kAxioms)
    q.axioms.push_back({label, parse_formula(text, scope)});
  return q;
}

bool is_bounded(const Formula& f, const Scope& scope) {
  switch (f.kind()) {
    case FormulaKind::Atom:
    case FormulaKind::NegAtom:
      return true;
    case FormulaKind::Not:
      return is_bounded(f.body(), scope);
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      return is_bounded(f.left(), scope) && is_bounded(f.right(), scope);
    case FormulaKind::Forall: {
      const Formula body = f.body();
      return body.kind() == FormulaKind::Implies &&
             is_bound_atom(body.left(), f.node().var) &&
             is_bounded(body.right(), scope);
    }
    case FormulaKind::Exists: {
      const Formula body = f.body();
      return body.kind() == FormulaKind::And &&
             is_bound_atom(body.left(), f.node().var) &&
             is_bounded(body.right(), scope);
    }
  }
  return false;
}

Formula induction_instance(const Formula& theta, SymId var,
                           const Scope& scope) {
  std::vector<SymId> fv = free_vars(theta, scope);
  if (fv.size() != 1 || fv[0] != var)
    throw std::invalid_argument(
        "induction_instance: θ must have exactly the designated free "
        "variable " +
        std::string(symbol_name(var)));
  if (!is_bounded(theta, scope))
    throw std::invalid_argument("induction_instance: θ must be bounded");
  TermId zero = make_term("0", {});
  TermId succ = make_term("S", {make_term(var, {})});
  Formula base = substitute_free(theta, var, zero);
  Formula step = forall(var, implies(theta, substitute_free(theta, var, succ)));
  return implies(conj(base, step), forall(var, theta));
}

Formula induction_instance(const Formula& theta, std::string_view var,
                           const Scope& scope) {
  return induction_instance(theta, intern_symbol(var), scope);
}

Formula square_theta(const Signature& sig) {
  Scope scope{&sig, nullptr};
  return parse_formula("exists y. (y <= (x * x) & y = (x * x))", scope);
}

TermSet numerals(int n) {
  if (n < 0) throw std::invalid_argument("numerals: n must be ≥ 0");
  TermSet set;
  TermId t = make_term("0", {});
  set.insert(t);
  for (int j = 0; j < n; ++j) {
    t = make_term("S", {t});
    set.insert(t);
  }
  return set;
}

namespace {

void pin_square_symbols(SkolemRegistry& reg, const Signature& sig,
                        bool with_constant) {
  Scope scope{&sig, &reg};
  reg.pin(square_theta(sig), "𝔮", scope);
  if (with_constant)
    reg.pin(parse_formula("exists x. ((exists y. (y <= (x * x) & y = (x * x)))"
                          " & (forall v. (~ v <= (S(x) * S(x))"
                          " | ~ v = (S(x) * S(x)))))",
                          scope),
            "𝔠", scope);
}

}  // namespace

void pin_square_names(SkolemRegistry& reg, const Signature& sig) {
  pin_square_symbols(reg, sig, /*with_constant=*/true);
}

TermSet z_terms(int n, SkolemRegistry& reg, const Signature& sig) {
  if (n < 0) throw std::invalid_argument("z_terms: n must be ≥ 0");
  pin_square_symbols(reg, sig, /*with_constant=*/false);
  TermSet set;
  TermId t = make_term("S", {make_term("S", {make_term("0", {})})});
  set.insert(t);
  for (int j = 0; j < n; ++j) {
    t = make_term("𝔮", {t});
    set.insert(t);
  }
  return set;
}

TermSet upsilon(SkolemRegistry& reg, const Signature& sig) {
  pin_square_symbols(reg, sig, /*with_constant=*/true);
  Scope scope{&sig, &reg};
  TermSet set;
  for (const char* text :
       {"0", "0 + 0", "0 * 0", "𝔠", "𝔠 * 𝔠", "(𝔠 * 𝔠) + 0", "S(𝔠)", "𝔮(𝔠)",
        "S(𝔠) * S(𝔠)", "(S(𝔠) * S(𝔠)) + 0"})
    set.insert(parse_term(text, scope));
  return set;
}

}  // namespace herbrand
