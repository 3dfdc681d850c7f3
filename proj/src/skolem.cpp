#include "herbrand/skolem.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace herbrand {

// ── Canonical forms ──────────────────────────────────────────────────────────

namespace {

struct Canonicalizer {
  const Scope& scope;
  std::vector<SymId> bound;
  std::vector<SymId> free_order;

  void term_rec(TermId id, std::string& out) {
    const TermNode& n = term(id);
    if (n.args.empty()) {
      for (int i = static_cast<int>(bound.size()) - 1; i >= 0; --i) {
        if (bound[i] == n.head) {
          out += 'B';
          out += std::to_string(bound.size() - 1 - i);
          return;
        }
      }
      if (!scope.is_constant_like(symbol_name(n.head))) {
        auto it = std::find(free_order.begin(), free_order.end(), n.head);
        std::size_t idx = it - free_order.begin();
        if (it == free_order.end()) free_order.push_back(n.head);
        out += 'F';
        out += std::to_string(idx);
        return;
      }
    }
    out += '[';
    out += symbol_name(n.head);
    out += ']';
    if (n.args.empty()) return;
    out += '(';
    for (std::size_t i = 0; i < n.args.size(); ++i) {
      if (i) out += ',';
      term_rec(n.args[i], out);
    }
    out += ')';
  }

  void formula_rec(const Formula& f, std::string& out) {
    const FormulaNode& n = f.node();
    switch (n.kind) {
      case FormulaKind::Atom:
      case FormulaKind::NegAtom:
        out += n.kind == FormulaKind::Atom ? "P" : "NP";
        out += '[';
        out += symbol_name(n.pred);
        out += "](";
        for (std::size_t i = 0; i < n.args.size(); ++i) {
          if (i) out += ',';
          term_rec(n.args[i], out);
        }
        out += ')';
        return;
      case FormulaKind::Not:
        out += "~(";
        formula_rec(f.left(), out);
        out += ')';
        return;
      case FormulaKind::And:
      case FormulaKind::Or:
      case FormulaKind::Implies:
      case FormulaKind::Iff: {
        out += n.kind == FormulaKind::And       ? "&"
               : n.kind == FormulaKind::Or      ? "|"
               : n.kind == FormulaKind::Implies ? ">"
                                                : "=";
        out += '(';
        formula_rec(f.left(), out);
        out += ',';
        formula_rec(f.right(), out);
        out += ')';
        return;
      }
      case FormulaKind::Forall:
      case FormulaKind::Exists:
        out += n.kind == FormulaKind::Forall ? "A." : "E.";
        bound.push_back(n.var);
        formula_rec(f.body(), out);
        bound.pop_back();
        return;
    }
  }
};

}  // namespace

std::string canonical_form(const Formula& f, const Scope& scope) {
  Canonicalizer canon{scope, {}, {}};
  std::string out;
  canon.formula_rec(f, out);
  return out;
}

// ── Registry ────────────────────────────────────────────────────────────────

const SkolemSymbol& SkolemRegistry::symbol_for(const Formula& existential,
                                               const Scope& scope) {
  if (existential.kind() != FormulaKind::Exists)
    throw std::invalid_argument("Skolem symbols are keyed by ∃-formulas");
  std::string key = canonical_form(existential, scope);
  if (auto it = by_key_.find(key); it != by_key_.end())
    return symbols_[it->second];
  int arity = static_cast<int>(free_vars(existential, scope).size());
  std::string name = next_name(arity);
  symbols_.push_back({name, arity, existential, key});
  by_key_.emplace(std::move(key), symbols_.size() - 1);
  by_name_.emplace(std::move(name), symbols_.size() - 1);
  return symbols_.back();
}

void SkolemRegistry::pin(const Formula& existential, std::string_view name,
                         const Scope& scope) {
  if (existential.kind() != FormulaKind::Exists)
    throw std::invalid_argument("Skolem symbols are keyed by ∃-formulas");
  std::string key = canonical_form(existential, scope);
  if (auto it = by_key_.find(key); it != by_key_.end()) {
    if (symbols_[it->second].name != name)
      throw std::logic_error("Skolem class already named '" +
                             symbols_[it->second].name + "'");
    return;
  }
  if (by_name_.count(name))
    throw std::logic_error("Skolem name '" + std::string(name) +
                           "' already taken");
  int arity = static_cast<int>(free_vars(existential, scope).size());
  symbols_.push_back({std::string(name), arity, existential, key});
  by_key_.emplace(std::move(key), symbols_.size() - 1);
  by_name_.emplace(std::string(name), symbols_.size() - 1);
}

const SkolemSymbol* SkolemRegistry::find(std::string_view name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? nullptr : &symbols_[it->second];
}

std::optional<int> SkolemRegistry::arity_of(std::string_view name) const {
  const SkolemSymbol* sym = find(name);
  if (!sym) return std::nullopt;
  return sym->arity;
}

std::string SkolemRegistry::next_name(int arity) {
  for (;;) {
    std::string candidate;
    if (goal_naming_ && arity == 0) {
      int idx = next_c_++;
      candidate = idx == 0 ? "𝔠" : "𝔠" + subscript(idx + 1);
    } else {
      candidate = "𝔣" + subscript(next_f_++);
    }
    if (!by_name_.count(candidate)) return candidate;
  }
}

// ── Skolemization ───────────────────────────────────────────────────────────

namespace {

Formula skolem_rec(const Formula& f, SkolemRegistry& reg, const Scope& scope) {
  const FormulaNode& n = f.node();
  switch (n.kind) {
    case FormulaKind::Atom:
    case FormulaKind::NegAtom:
      return f;
    // Recurse left before right so auto-generated symbol numbers follow the
    // textual order of the existentials; argument evaluation order would not
    // guarantee that.
    case FormulaKind::And: {
      Formula l = skolem_rec(f.left(), reg, scope);
      return conj(l, skolem_rec(f.right(), reg, scope));
    }
    case FormulaKind::Or: {
      Formula l = skolem_rec(f.left(), reg, scope);
      return disj(l, skolem_rec(f.right(), reg, scope));
    }
    case FormulaKind::Forall:
      return forall(n.var, skolem_rec(f.body(), reg, scope));
    case FormulaKind::Exists: {
      // The symbol is keyed by the original subformula ∃x ψ (not by ψ^S);
      // copy the name out before recursing — the registry may grow.
      std::string name = reg.symbol_for(f, scope).name;
      std::vector<SymId> args = free_vars(f, scope);
      std::vector<TermId> arg_terms;
      arg_terms.reserve(args.size());
      for (SymId v : args) arg_terms.push_back(make_term(v, {}));
      TermId witness = make_term(name, std::move(arg_terms));
      Formula body = skolem_rec(f.body(), reg, scope);
      return substitute_free(body, n.var, witness);
    }
    case FormulaKind::Not:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      throw std::invalid_argument("skolem_s expects an RNNF formula");
  }
  return f;
}

Formula strip_universals(const Formula& f, std::vector<SymId>& universals) {
  const FormulaNode& n = f.node();
  switch (n.kind) {
    case FormulaKind::Forall:
      universals.push_back(n.var);
      return strip_universals(f.body(), universals);
    case FormulaKind::And:
      return conj(strip_universals(f.left(), universals),
                  strip_universals(f.right(), universals));
    case FormulaKind::Or:
      return disj(strip_universals(f.left(), universals),
                  strip_universals(f.right(), universals));
    default:
      return f;
  }
}

}  // namespace

Formula skolem_s(const RnnfFormula& f, SkolemRegistry& reg,
                 const Signature& sig) {
  Scope scope{&sig, &reg};
  return skolem_rec(f.formula(), reg, scope);
}

Skolemization skolemize(const Formula& f, SkolemRegistry& reg,
                        const Signature& sig) {
  Skolemization out;
  RnnfFormula rnnf = to_rnnf(f);
  out.rnnf = rnnf.formula();
  out.with_foralls = skolem_s(rnnf, reg, sig);
  out.matrix = strip_universals(out.with_foralls, out.universals);
  return out;
}

// ── Instances ───────────────────────────────────────────────────────────────

void collect_atom_sides(const Formula& f, std::vector<TermId>& out) {
  const FormulaNode& n = f.node();
  switch (n.kind) {
    case FormulaKind::Atom:
    case FormulaKind::NegAtom:
      for (TermId t : n.args) out.push_back(t);
      return;
    case FormulaKind::Not:
      collect_atom_sides(f.left(), out);
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      collect_atom_sides(f.left(), out);
      collect_atom_sides(f.right(), out);
      return;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      collect_atom_sides(f.body(), out);
      return;
  }
}

bool atom_sides_in(const Formula& ground, const TermSet& lambda) {
  std::vector<TermId> sides;
  collect_atom_sides(ground, sides);
  for (TermId t : sides)
    if (!lambda.contains(t)) return false;
  return true;
}

namespace {

bool match(TermId pattern, TermId target, const Scope& scope,
           std::vector<std::pair<SymId, TermId>>& bindings) {
  const TermNode& p = term(pattern);
  if (p.args.empty() && !scope.is_constant_like(symbol_name(p.head))) {
    for (const auto& [v, t] : bindings)
      if (v == p.head) return t == target;
    bindings.emplace_back(p.head, target);
    return true;
  }
  const TermNode& t = term(target);
  if (p.head != t.head || p.args.size() != t.args.size()) return false;
  for (std::size_t i = 0; i < p.args.size(); ++i)
    if (!match(p.args[i], t.args[i], scope, bindings)) return false;
  return true;
}

constexpr std::size_t kInstanceEnumerationCap = std::size_t(1) << 22;

}  // namespace

std::vector<SkolemInstance> available_instances(const Formula& f,
                                                const TermSet& lambda,
                                                SkolemRegistry& reg,
                                                const Signature& sig) {
  Scope scope{&sig, &reg};
  Skolemization sk = skolemize(f, reg, sig);
  std::vector<SymId> vars = free_vars(sk.matrix, scope);
  std::vector<TermId> sides;
  collect_atom_sides(sk.matrix, sides);

  std::vector<TermId> closure = lambda.subterm_closure();
  std::unordered_map<TermId, std::size_t> closure_index;
  for (std::size_t i = 0; i < closure.size(); ++i)
    closure_index.emplace(closure[i], i);

  // Narrow per-variable candidates by matching each atom side against Λ.
  // Any qualifying substitution sends every side into Λ, so its bindings
  // appear among these matches; the final per-substitution check below
  // restores exactness.
  std::vector<std::optional<std::unordered_set<TermId>>> cand(vars.size());
  auto var_slot = [&](SymId v) {
    return std::find(vars.begin(), vars.end(), v) - vars.begin();
  };
  std::vector<TermId> seen_sides;
  for (TermId side : sides) {
    if (std::find(seen_sides.begin(), seen_sides.end(), side) !=
        seen_sides.end())
      continue;
    seen_sides.push_back(side);
    std::vector<SymId> side_vars = term_vars(side, scope);
    if (side_vars.empty()) {
      if (!lambda.contains(side)) return {};
      continue;
    }
    std::vector<std::unordered_set<TermId>> collected(side_vars.size());
    std::vector<std::pair<SymId, TermId>> bindings;
    for (TermId member : lambda.members()) {
      bindings.clear();
      if (!match(side, member, scope, bindings)) continue;
      for (const auto& [v, t] : bindings) {
        auto it = std::find(side_vars.begin(), side_vars.end(), v);
        collected[it - side_vars.begin()].insert(t);
      }
    }
    for (std::size_t i = 0; i < side_vars.size(); ++i) {
      auto& slot = cand[var_slot(side_vars[i])];
      if (!slot) {
        slot = std::move(collected[i]);
      } else {
        std::unordered_set<TermId> merged;
        for (TermId t : *slot)
          if (collected[i].count(t)) merged.insert(t);
        slot = std::move(merged);
      }
    }
  }

  // Candidate lists in subterm-closure order; unconstrained variables range
  // over the whole closure.
  std::vector<std::vector<TermId>> lists(vars.size());
  std::size_t product = vars.empty() ? 1 : 0;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (cand[i]) {
      for (TermId t : closure)
        if (cand[i]->count(t)) lists[i].push_back(t);
    } else {
      lists[i] = closure;
    }
    if (lists[i].empty()) return {};
    product = i == 0 ? lists[i].size() : product * lists[i].size();
    if (product > kInstanceEnumerationCap)
      throw std::length_error("Skolem instance enumeration too large");
  }

  std::vector<SkolemInstance> out;
  std::vector<std::size_t> odo(vars.size(), 0);
  for (;;) {
    std::vector<std::pair<SymId, TermId>> subst;
    subst.reserve(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i)
      subst.emplace_back(vars[i], lists[i][odo[i]]);
    Formula ground = substitute_free(sk.matrix, subst);
    if (atom_sides_in(ground, lambda))
      out.push_back({f, std::move(subst), std::move(ground)});
    // Advance the odometer (last variable fastest).
    std::size_t k = vars.size();
    while (k > 0) {
      if (++odo[k - 1] < lists[k - 1].size()) break;
      odo[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return out;
}

}  // namespace herbrand
