#include "herbrand/normalize.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "herbrand/signature.hpp"

namespace herbrand {

// ── NNF ─────────────────────────────────────────────────────────────────────

namespace {

Formula nnf_rec(const Formula& f, bool positive) {
  const FormulaNode& n = f.node();
  switch (n.kind) {
    case FormulaKind::Atom:
      return positive ? f : neg_atom(n.pred, n.args);
    case FormulaKind::NegAtom:
      return positive ? f : atom(n.pred, n.args);
    case FormulaKind::Not:
      return nnf_rec(f.left(), !positive);
    case FormulaKind::And:
      return positive ? conj(nnf_rec(f.left(), true), nnf_rec(f.right(), true))
                      : disj(nnf_rec(f.left(), false),
                             nnf_rec(f.right(), false));
    case FormulaKind::Or:
      return positive ? disj(nnf_rec(f.left(), true), nnf_rec(f.right(), true))
                      : conj(nnf_rec(f.left(), false),
                             nnf_rec(f.right(), false));
    case FormulaKind::Implies:
      // A -> B  ≡  ~A | B
      return positive ? disj(nnf_rec(f.left(), false), nnf_rec(f.right(), true))
                      : conj(nnf_rec(f.left(), true),
                             nnf_rec(f.right(), false));
    case FormulaKind::Iff: {
      // Expand before the descent: A <-> B  ≡  (~A | B) & (~B | A).
      Formula expanded = conj(disj(neg(f.left()), f.right()),
                              disj(neg(f.right()), f.left()));
      return nnf_rec(expanded, positive);
    }
    case FormulaKind::Forall:
      return positive ? forall(n.var, nnf_rec(f.body(), true))
                      : exists(n.var, nnf_rec(f.body(), false));
    case FormulaKind::Exists:
      return positive ? exists(n.var, nnf_rec(f.body(), true))
                      : forall(n.var, nnf_rec(f.body(), false));
  }
  return f;
}

}  // namespace

Formula to_nnf(const Formula& f) { return nnf_rec(f, true); }

bool is_nnf(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Atom:
    case FormulaKind::NegAtom:
      return true;
    case FormulaKind::Not:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      return false;
    case FormulaKind::And:
    case FormulaKind::Or:
      return is_nnf(f.left()) && is_nnf(f.right());
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      return is_nnf(f.body());
  }
  return false;
}

// ── Rectification ───────────────────────────────────────────────────────────

namespace {

// Leaf names with an occurrence not under a binder of the same name.  These
// are reserved: no binder may keep or receive such a name.
void collect_unbound_leaves(const Formula& f, std::vector<SymId>& bound,
                            std::vector<SymId>& out) {
  const FormulaNode& n = f.node();
  switch (n.kind) {
    case FormulaKind::Atom:
    case FormulaKind::NegAtom:
      for (TermId t : n.args) {
        for (TermId sub : subterms(t)) {
          const TermNode& tn = term(sub);
          if (!tn.args.empty()) continue;
          if (std::find(bound.begin(), bound.end(), tn.head) != bound.end())
            continue;
          if (std::find(out.begin(), out.end(), tn.head) == out.end())
            out.push_back(tn.head);
        }
      }
      return;
    case FormulaKind::Not:
      collect_unbound_leaves(f.left(), bound, out);
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      collect_unbound_leaves(f.left(), bound, out);
      collect_unbound_leaves(f.right(), bound, out);
      return;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      bound.push_back(n.var);
      collect_unbound_leaves(f.body(), bound, out);
      bound.pop_back();
      return;
  }
}

struct Rectifier {
  std::vector<SymId> used;       // names no future binder may take
  std::vector<SymId> all_names;  // every name in the input, for freshness
  std::map<SymId, std::vector<SymId>> env;  // binder renamings, stacked

  bool taken(SymId s) const {
    return std::find(used.begin(), used.end(), s) != used.end() ||
           std::find(all_names.begin(), all_names.end(), s) != all_names.end();
  }

  SymId fresh(SymId base) {
    const std::string& name = symbol_name(base);
    for (int k = 1;; ++k) {
      SymId candidate = intern_symbol(name + subscript(k));
      if (!taken(candidate)) return candidate;
    }
  }

  TermId rename_term(TermId t) {
    std::vector<std::pair<SymId, TermId>> map;
    for (const auto& [name, stack] : env) {
      if (stack.empty() || stack.back() == name) continue;
      map.emplace_back(name, make_term(stack.back()));
    }
    return map.empty() ? t : substitute(t, map);
  }

  Formula rec(const Formula& f) {
    const FormulaNode& n = f.node();
    switch (n.kind) {
      case FormulaKind::Atom:
      case FormulaKind::NegAtom: {
        std::vector<TermId> args;
        args.reserve(n.args.size());
        for (TermId t : n.args) args.push_back(rename_term(t));
        return n.kind == FormulaKind::Atom ? atom(n.pred, std::move(args))
                                           : neg_atom(n.pred, std::move(args));
      }
      case FormulaKind::Not:
        return neg(rec(f.left()));
      // The recursion mutates `used`, so the left branch must run before the
      // right one; argument evaluation order would not guarantee that.
      case FormulaKind::And: {
        Formula l = rec(f.left());
        return conj(l, rec(f.right()));
      }
      case FormulaKind::Or: {
        Formula l = rec(f.left());
        return disj(l, rec(f.right()));
      }
      case FormulaKind::Implies: {
        Formula l = rec(f.left());
        return implies(l, rec(f.right()));
      }
      case FormulaKind::Iff: {
        Formula l = rec(f.left());
        return iff(l, rec(f.right()));
      }
      case FormulaKind::Forall:
      case FormulaKind::Exists: {
        SymId name = n.var;
        if (std::find(used.begin(), used.end(), name) != used.end()) {
          name = fresh(n.var);
          all_names.push_back(name);
        }
        used.push_back(name);
        env[n.var].push_back(name);
        Formula body = rec(f.body());
        env[n.var].pop_back();
        return n.kind == FormulaKind::Forall ? forall(name, body)
                                             : exists(name, body);
      }
    }
    return f;
  }
};

}  // namespace

Formula rectify(const Formula& f) {
  Rectifier r;
  std::vector<SymId> bound;
  collect_unbound_leaves(f, bound, r.used);
  collect_names(f, r.all_names);
  return r.rec(f);
}

namespace {

// Two passes: the first records all binder names, the second checks that no
// occurrence of a binder name escapes its scope.  A single pass would miss a
// free occurrence textually before the binder.
void all_binders(const Formula& f, std::vector<SymId>& out) {
  const FormulaNode& n = f.node();
  switch (n.kind) {
    case FormulaKind::Atom:
    case FormulaKind::NegAtom:
      return;
    case FormulaKind::Not:
      all_binders(f.left(), out);
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      all_binders(f.left(), out);
      all_binders(f.right(), out);
      return;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      out.push_back(n.var);
      all_binders(f.body(), out);
      return;
  }
}

bool leaf_escapes(const Formula& f, const std::vector<SymId>& binders,
                  std::vector<SymId>& active) {
  const FormulaNode& n = f.node();
  switch (n.kind) {
    case FormulaKind::Atom:
    case FormulaKind::NegAtom:
      for (TermId t : n.args)
        for (TermId sub : subterms(t)) {
          const TermNode& tn = term(sub);
          if (!tn.args.empty()) continue;
          if (std::find(binders.begin(), binders.end(), tn.head) ==
              binders.end())
            continue;
          if (std::find(active.begin(), active.end(), tn.head) ==
              active.end())
            return true;
        }
      return false;
    case FormulaKind::Not:
      return leaf_escapes(f.left(), binders, active);
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      return leaf_escapes(f.left(), binders, active) ||
             leaf_escapes(f.right(), binders, active);
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      active.push_back(n.var);
      bool escaped = leaf_escapes(f.body(), binders, active);
      active.pop_back();
      return escaped;
    }
  }
  return false;
}

}  // namespace

bool is_rectified(const Formula& f) {
  std::vector<SymId> binders;
  all_binders(f, binders);
  for (std::size_t i = 0; i < binders.size(); ++i)
    for (std::size_t j = i + 1; j < binders.size(); ++j)
      if (binders[i] == binders[j]) return false;
  std::vector<SymId> active;
  return !leaf_escapes(f, binders, active);
}

RnnfFormula RnnfFormula::check(Formula f) {
  if (!is_nnf(f))
    throw std::invalid_argument("formula is not in negation normal form");
  if (!is_rectified(f))
    throw std::invalid_argument("formula is not rectified");
  return RnnfFormula(std::move(f));
}

RnnfFormula to_rnnf(const Formula& f) {
  return RnnfFormula::check(rectify(to_nnf(f)));
}

}  // namespace herbrand
