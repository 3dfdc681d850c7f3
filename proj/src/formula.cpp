#include "herbrand/formula.hpp"

#include <algorithm>

namespace herbrand {

namespace {

std::shared_ptr<const FormulaNode> make_node(FormulaNode node) {
  return std::make_shared<const FormulaNode>(std::move(node));
}

Formula binary(FormulaKind kind, Formula a, Formula b) {
  FormulaNode n;
  n.kind = kind;
  n.a = a.ptr();
  n.b = b.ptr();
  return Formula(make_node(std::move(n)));
}

Formula quantifier(FormulaKind kind, SymId var, Formula body) {
  FormulaNode n;
  n.kind = kind;
  n.var = var;
  n.a = body.ptr();
  return Formula(make_node(std::move(n)));
}

}  // namespace

Formula atom(SymId pred, std::vector<TermId> args) {
  FormulaNode n;
  n.kind = FormulaKind::Atom;
  n.pred = pred;
  n.args = std::move(args);
  return Formula(make_node(std::move(n)));
}

Formula atom(std::string_view pred, std::vector<TermId> args) {
  return atom(intern_symbol(pred), std::move(args));
}

Formula neg_atom(SymId pred, std::vector<TermId> args) {
  FormulaNode n;
  n.kind = FormulaKind::NegAtom;
  n.pred = pred;
  n.args = std::move(args);
  return Formula(make_node(std::move(n)));
}

Formula neg(Formula f) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      return neg_atom(f.node().pred, f.node().args);
    case FormulaKind::NegAtom:
      return atom(f.node().pred, f.node().args);
    default: {
      FormulaNode n;
      n.kind = FormulaKind::Not;
      n.a = f.ptr();
      return Formula(make_node(std::move(n)));
    }
  }
}

Formula conj(Formula a, Formula b) { return binary(FormulaKind::And, a, b); }
Formula disj(Formula a, Formula b) { return binary(FormulaKind::Or, a, b); }
Formula implies(Formula a, Formula b) {
  return binary(FormulaKind::Implies, a, b);
}
Formula iff(Formula a, Formula b) { return binary(FormulaKind::Iff, a, b); }

Formula forall(SymId var, Formula body) {
  return quantifier(FormulaKind::Forall, var, body);
}
Formula forall(std::string_view var, Formula body) {
  return forall(intern_symbol(var), body);
}
Formula exists(SymId var, Formula body) {
  return quantifier(FormulaKind::Exists, var, body);
}
Formula exists(std::string_view var, Formula body) {
  return exists(intern_symbol(var), body);
}

// ── Equality ────────────────────────────────────────────────────────────────

bool structural_equal(const Formula& f, const Formula& g) {
  if (f.ptr() == g.ptr()) return true;
  if (f.kind() != g.kind()) return false;
  const FormulaNode& a = f.node();
  const FormulaNode& b = g.node();
  switch (a.kind) {
    case FormulaKind::Atom:
    case FormulaKind::NegAtom:
      return a.pred == b.pred && a.args == b.args;
    case FormulaKind::Not:
      return structural_equal(f.left(), g.left());
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      return structural_equal(f.left(), g.left()) &&
             structural_equal(f.right(), g.right());
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      return a.var == b.var && structural_equal(f.body(), g.body());
  }
  return false;
}

namespace {

// Shared machinery for alpha_equal / variant_equal.  `env` is the stack of
// paired binder names; `free_map` (when present) accumulates the bijection
// on free variables.
struct EquivCheck {
  std::vector<std::pair<SymId, SymId>> env;
  std::vector<std::pair<SymId, SymId>>* free_map = nullptr;
  const Scope* scope = nullptr;

  bool leaf(SymId x, SymId y) {
    int ix = -1, iy = -1;
    for (int i = static_cast<int>(env.size()) - 1; i >= 0; --i) {
      if (ix < 0 && env[i].first == x) ix = i;
      if (iy < 0 && env[i].second == y) iy = i;
    }
    if (ix >= 0 || iy >= 0) return ix == iy && env[ix].second == y;
    if (!free_map) return x == y;
    // Free leaf: variables may be renamed bijectively, constants may not.
    bool xvar = !scope->is_constant_like(symbol_name(x));
    bool yvar = !scope->is_constant_like(symbol_name(y));
    if (xvar != yvar) return false;
    if (!xvar) return x == y;
    for (const auto& [fx, fy] : *free_map) {
      if (fx == x) return fy == y;
      if (fy == y) return false;
    }
    free_map->emplace_back(x, y);
    return true;
  }

  bool terms(TermId s, TermId t) {
    const TermNode& a = term(s);
    const TermNode& b = term(t);
    if (a.args.empty() && b.args.empty()) return leaf(a.head, b.head);
    if (a.head != b.head || a.args.size() != b.args.size()) return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
      if (!terms(a.args[i], b.args[i])) return false;
    return true;
  }

  bool formulas(const Formula& f, const Formula& g) {
    if (f.kind() != g.kind()) return false;
    const FormulaNode& a = f.node();
    const FormulaNode& b = g.node();
    switch (a.kind) {
      case FormulaKind::Atom:
      case FormulaKind::NegAtom: {
        if (a.pred != b.pred || a.args.size() != b.args.size()) return false;
        for (std::size_t i = 0; i < a.args.size(); ++i)
          if (!terms(a.args[i], b.args[i])) return false;
        return true;
      }
      case FormulaKind::Not:
        return formulas(f.left(), g.left());
      case FormulaKind::And:
      case FormulaKind::Or:
      case FormulaKind::Implies:
      case FormulaKind::Iff:
        return formulas(f.left(), g.left()) && formulas(f.right(), g.right());
      case FormulaKind::Forall:
      case FormulaKind::Exists: {
        env.emplace_back(a.var, b.var);
        bool ok = formulas(f.body(), g.body());
        env.pop_back();
        return ok;
      }
    }
    return false;
  }
};

}  // namespace

bool alpha_equal(const Formula& f, const Formula& g) {
  EquivCheck check;
  return check.formulas(f, g);
}

bool variant_equal(const Formula& f, const Formula& g, const Scope& scope) {
  std::vector<std::pair<SymId, SymId>> free_map;
  EquivCheck check;
  check.free_map = &free_map;
  check.scope = &scope;
  return check.formulas(f, g);
}

// ── Variable queries ────────────────────────────────────────────────────────

namespace {

void term_free_vars(TermId id, const Scope& scope,
                    const std::vector<SymId>& bound, std::vector<SymId>& out) {
  const TermNode& n = term(id);
  if (n.args.empty()) {
    if (std::find(bound.begin(), bound.end(), n.head) != bound.end()) return;
    if (scope.is_constant_like(symbol_name(n.head))) return;
    if (std::find(out.begin(), out.end(), n.head) == out.end())
      out.push_back(n.head);
    return;
  }
  for (TermId a : n.args) term_free_vars(a, scope, bound, out);
}

void formula_free_vars(const Formula& f, const Scope& scope,
                       std::vector<SymId>& bound, std::vector<SymId>& out) {
  const FormulaNode& n = f.node();
  switch (n.kind) {
    case FormulaKind::Atom:
    case FormulaKind::NegAtom:
      for (TermId t : n.args) term_free_vars(t, scope, bound, out);
      return;
    case FormulaKind::Not:
      formula_free_vars(f.left(), scope, bound, out);
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      formula_free_vars(f.left(), scope, bound, out);
      formula_free_vars(f.right(), scope, bound, out);
      return;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      bound.push_back(n.var);
      formula_free_vars(f.body(), scope, bound, out);
      bound.pop_back();
      return;
  }
}

}  // namespace

std::vector<SymId> free_vars(const Formula& f, const Scope& scope) {
  std::vector<SymId> bound, out;
  formula_free_vars(f, scope, bound, out);
  return out;
}

bool is_sentence(const Formula& f, const Scope& scope) {
  return free_vars(f, scope).empty();
}

bool is_ground(const Formula& f, const Scope& scope) {
  const FormulaNode& n = f.node();
  switch (n.kind) {
    case FormulaKind::Atom:
    case FormulaKind::NegAtom:
      for (TermId t : n.args)
        if (!herbrand::is_ground(t, scope)) return false;
      return true;
    case FormulaKind::Not:
      return is_ground(f.left(), scope);
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      return is_ground(f.left(), scope) && is_ground(f.right(), scope);
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      return false;
  }
  return false;
}

// ── Substitution ────────────────────────────────────────────────────────────

namespace {

Formula subst_rec(const Formula& f,
                  std::vector<std::pair<SymId, TermId>> map) {
  if (map.empty()) return f;
  const FormulaNode& n = f.node();
  switch (n.kind) {
    case FormulaKind::Atom:
    case FormulaKind::NegAtom: {
      std::vector<TermId> args;
      args.reserve(n.args.size());
      for (TermId t : n.args) args.push_back(substitute(t, map));
      return n.kind == FormulaKind::Atom ? atom(n.pred, std::move(args))
                                         : neg_atom(n.pred, std::move(args));
    }
    case FormulaKind::Not:
      return neg(subst_rec(f.left(), map));
    case FormulaKind::And:
      return conj(subst_rec(f.left(), map), subst_rec(f.right(), map));
    case FormulaKind::Or:
      return disj(subst_rec(f.left(), map), subst_rec(f.right(), map));
    case FormulaKind::Implies:
      return implies(subst_rec(f.left(), map), subst_rec(f.right(), map));
    case FormulaKind::Iff:
      return iff(subst_rec(f.left(), map), subst_rec(f.right(), map));
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      // The binder shadows its variable: drop it from the map.
      std::vector<std::pair<SymId, TermId>> masked;
      for (const auto& kv : map)
        if (kv.first != n.var) masked.push_back(kv);
      Formula body = subst_rec(f.body(), std::move(masked));
      return n.kind == FormulaKind::Forall ? forall(n.var, body)
                                           : exists(n.var, body);
    }
  }
  return f;
}

}  // namespace

Formula substitute_free(const Formula& f, SymId var, TermId value) {
  return subst_rec(f, {{var, value}});
}

Formula substitute_free(const Formula& f,
                        const std::vector<std::pair<SymId, TermId>>& map) {
  return subst_rec(f, map);
}

namespace {
void collect_term_names(TermId id, std::vector<SymId>& out) {
  const TermNode& n = term(id);
  if (std::find(out.begin(), out.end(), n.head) == out.end())
    out.push_back(n.head);
  for (TermId a : n.args) collect_term_names(a, out);
}
}  // namespace

void collect_names(const Formula& f, std::vector<SymId>& out) {
  const FormulaNode& n = f.node();
  switch (n.kind) {
    case FormulaKind::Atom:
    case FormulaKind::NegAtom:
      if (std::find(out.begin(), out.end(), n.pred) == out.end())
        out.push_back(n.pred);
      for (TermId t : n.args) collect_term_names(t, out);
      return;
    case FormulaKind::Not:
      collect_names(f.left(), out);
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      collect_names(f.left(), out);
      collect_names(f.right(), out);
      return;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      if (std::find(out.begin(), out.end(), n.var) == out.end())
        out.push_back(n.var);
      collect_names(f.body(), out);
      return;
  }
}

// ── Printing ────────────────────────────────────────────────────────────────

namespace {

// Precedence levels; higher binds tighter.  Quantifiers get 0 (their body
// extends maximally right, so they need parentheses inside anything).
int precedence(FormulaKind k) {
  switch (k) {
    case FormulaKind::Forall:
    case FormulaKind::Exists: return 0;
    case FormulaKind::Iff: return 1;
    case FormulaKind::Implies: return 2;
    case FormulaKind::Or: return 3;
    case FormulaKind::And: return 4;
    case FormulaKind::Not: return 5;
    case FormulaKind::Atom:
    case FormulaKind::NegAtom: return 6;
  }
  return 6;
}

void print_atom_body(const FormulaNode& n, std::string& out) {
  const std::string& pred = symbol_name(n.pred);
  if (n.args.size() == 2 && (pred == "=" || pred == "<=")) {
    out += to_string(n.args[0]);
    out += ' ';
    out += pred;
    out += ' ';
    out += to_string(n.args[1]);
    return;
  }
  out += pred;
  out += '(';
  for (std::size_t i = 0; i < n.args.size(); ++i) {
    if (i) out += ", ";
    out += to_string(n.args[i]);
  }
  out += ')';
}

void print_formula(const Formula& f, int ctx, std::string& out) {
  const FormulaNode& n = f.node();
  int prec = precedence(n.kind);
  bool wrap = prec < ctx;
  if (wrap) out += '(';
  switch (n.kind) {
    case FormulaKind::Atom:
      print_atom_body(n, out);
      break;
    case FormulaKind::NegAtom:
      out += '~';
      print_atom_body(n, out);
      break;
    case FormulaKind::Not:
      out += '~';
      print_formula(f.left(), prec + 1, out);
      break;
    case FormulaKind::And:
      print_formula(f.left(), prec, out);
      out += " & ";
      print_formula(f.right(), prec + 1, out);
      break;
    case FormulaKind::Or:
      print_formula(f.left(), prec, out);
      out += " | ";
      print_formula(f.right(), prec + 1, out);
      break;
    case FormulaKind::Implies:
      print_formula(f.left(), prec + 1, out);
      out += " -> ";
      print_formula(f.right(), prec, out);
      break;
    case FormulaKind::Iff:
      print_formula(f.left(), prec + 1, out);
      out += " <-> ";
      print_formula(f.right(), prec, out);
      break;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      out += n.kind == FormulaKind::Forall ? "forall " : "exists ";
      out += symbol_name(n.var);
      out += ". ";
      print_formula(f.body(), 0, out);
      break;
  }
  if (wrap) out += ')';
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print_formula(f, 0, out);
  return out;
}

}  // namespace herbrand
