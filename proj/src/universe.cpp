#include "herbrand/universe.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "herbrand/coding.hpp"

namespace herbrand {

// ── Closure ─────────────────────────────────────────────────────────────────

TermSet ClosureResult::level(std::size_t j) const {
  if (j >= level_sizes.size())
    throw std::out_of_range("ClosureResult::level: no such level");
  TermSet out;
  for (std::size_t i = 0; i < level_sizes[j]; ++i)
    out.insert(set.members()[i]);
  return out;
}

ClosureResult close_universe(const TermSet& lambda, int k,
                             const Signature& sig, const SkolemRegistry* reg,
                             const UniverseConfig& cfg) {
  if (k < 0) throw std::invalid_argument("close_universe: negative depth");
  if (cfg.level_budget == 0)
    throw std::invalid_argument("close_universe: level budget must be positive");
  if (cfg.code_budget && *cfg.code_budget < 1)
    throw std::invalid_argument("close_universe: code budget must be positive");

  ClosureResult r;
  r.set = lambda;
  r.level_sizes.push_back(r.set.size());

  for (int level = 1; level <= k; ++level) {
    // Snapshot Λ^⟨level-1⟩: new members must not feed the same level.
    const std::vector<TermId> base = r.set.members();
    std::size_t added = 0;
    bool stop = false;

    auto admit = [&](TermId t) {
      if (r.set.contains(t)) return;
      if (cfg.code_budget && code_term(t).value > *cfg.code_budget) return;
      if (added == cfg.level_budget) {
        r.truncated = true;
        stop = true;
        return;
      }
      r.set.insert(t);
      ++added;
    };

    auto apply_symbol = [&](const std::string& name, int arity) {
      if (arity == 0) {
        admit(make_term(name));
        return;
      }
      if (base.empty()) return;
      std::vector<std::size_t> idx(arity, 0);
      std::vector<TermId> args(arity);
      while (!stop) {
        for (int i = 0; i < arity; ++i) args[i] = base[idx[i]];
        admit(make_term(name, args));
        int pos = arity - 1;
        while (pos >= 0 && ++idx[pos] == base.size()) idx[pos--] = 0;
        if (pos < 0) break;
      }
    };

    for (const auto& [name, arity] : sig.functions()) {
      if (stop) break;
      apply_symbol(name, arity);
    }
    if (reg) {
      for (const SkolemSymbol& sym : reg->symbols()) {
        if (stop) break;
        if (cfg.skolem_code_threshold &&
            code_formula(sym.source).value > BigNat(level - 1))
          continue;
        apply_symbol(sym.name, sym.arity);
      }
    }
    r.level_sizes.push_back(r.set.size());
  }
  return r;
}

// ── Prover loop ─────────────────────────────────────────────────────────────

namespace {

void insert_ground_subterms(const Formula& f, const Scope& scope,
                            TermSet& out) {
  const FormulaNode& n = f.node();
  switch (n.kind) {
    case FormulaKind::Atom:
    case FormulaKind::NegAtom:
      for (TermId arg : n.args)
        for (TermId sub : subterms(arg))
          if (is_ground(sub, scope)) out.insert(sub);
      return;
    case FormulaKind::Not:
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      insert_ground_subterms(f.left(), scope, out);
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      insert_ground_subterms(f.left(), scope, out);
      insert_ground_subterms(f.right(), scope, out);
      return;
  }
}

}  // namespace

ProveResult herbrand_prove(const std::vector<LabeledFormula>& theory,
                           const Formula& goal, SkolemRegistry& reg,
                           const Signature& sig, const UniverseConfig& cfg,
                           const std::optional<TermSet>& lambda_override) {
  Scope scope{&sig, &reg};
  if (!is_sentence(goal, scope))
    throw std::invalid_argument("herbrand_prove: goal must be a sentence");
  if (cfg.max_depth < 0)
    throw std::invalid_argument("herbrand_prove: negative stage budget");

  // Skolemize everything up front: the registry then carries every symbol
  // (the goal's fresh constants under the 𝔠 naming), and the stage seed can
  // read its ground terms off the matrices.
  std::vector<Formula> matrices;
  matrices.reserve(theory.size() + 1);
  for (const LabeledFormula& ax : theory)
    matrices.push_back(skolemize(ax.formula, reg, sig).matrix);
  reg.set_goal_naming(true);
  Formula negated = neg(goal);
  matrices.push_back(skolemize(negated, reg, sig).matrix);
  reg.set_goal_naming(false);

  std::vector<LabeledFormula> problem = theory;
  problem.push_back({"goal", negated});

  ProveResult res;
  // Runs one search; true when the loop should stop (proved or out of budget).
  auto run_stage = [&](const TermSet& lam, int stage) {
    res.lambda_sizes.push_back(lam.size());
    res.stage = stage;
    res.lambda = lam;
    try {
      EvalOutcome out = find_evaluation(problem, lam, reg, sig, cfg.solver);
      bool sat = out.sat;
      res.outcome = std::move(out);
      res.status = sat ? ProveStatus::EvaluationFound : ProveStatus::Proved;
      return !sat;
    } catch (const ResourceLimitError& e) {
      res.status = ProveStatus::BudgetExhausted;
      res.note = e.what();
      res.outcome.reset();
      return true;
    }
  };

  if (lambda_override) {
    run_stage(*lambda_override, 0);
    return res;
  }

  TermSet lam;
  for (const Formula& m : matrices) insert_ground_subterms(m, scope, lam);
  lam.insert(make_term("0"));

  for (int stage = 0;; ++stage) {
    if (run_stage(lam, stage)) return res;
    if (stage == cfg.max_depth) return res;  // satisfiable at final budget
    ClosureResult cr = close_universe(lam, 1, sig, &reg, cfg);
    res.closure_truncated = res.closure_truncated || cr.truncated;
    lam = std::move(cr.set);
  }
}

// ── Quotient model ──────────────────────────────────────────────────────────

namespace {

// Enumerates member^arity tuples in member-index lexicographic order.
template <typename Fn>
void for_each_tuple(const std::vector<TermId>& members, int arity, Fn&& fn) {
  if (arity == 0) {
    fn(std::vector<TermId>{});
    return;
  }
  if (members.empty()) return;
  std::vector<std::size_t> idx(arity, 0);
  std::vector<TermId> args(arity);
  for (;;) {
    for (int i = 0; i < arity; ++i) args[i] = members[idx[i]];
    fn(args);
    int pos = arity - 1;
    while (pos >= 0 && ++idx[pos] == members.size()) idx[pos--] = 0;
    if (pos < 0) return;
  }
}

}  // namespace

QuotientStructure herbrand_model(const TermSet& lambda, const Evaluation& p,
                                 const Signature& sig,
                                 const SkolemRegistry* reg) {
  if (p.table().lambda().members() != lambda.members())
    throw std::invalid_argument(
        "herbrand_model: evaluation is not over this term set");

  QuotientStructure q;
  q.classes = p.equivalence_classes();
  for (std::size_t ci = 0; ci < q.classes.size(); ++ci)
    for (TermId t : q.classes[ci]) q.class_of.emplace(t, ci);

  const std::vector<TermId>& members = lambda.members();
  auto class_key = [&](const std::vector<TermId>& args) {
    std::vector<std::size_t> key(args.size());
    for (std::size_t i = 0; i < args.size(); ++i) key[i] = q.class_of.at(args[i]);
    return key;
  };

  for (const auto& [rname, rarity] : sig.predicates()) {
    auto& table = q.relations[rname];
    SymId pred = intern_symbol(rname);
    for_each_tuple(members, rarity, [&](const std::vector<TermId>& args) {
      auto idx = p.table().index_of(pred, args);
      if (!idx) throw std::logic_error("herbrand_model: atom missing from table");
      bool val = p.value(*idx);
      auto [it, fresh] = table.emplace(class_key(args), val);
      if (!fresh && it->second != val)
        throw std::logic_error("herbrand_model: ill-defined relation table for " +
                               rname);
    });
  }

  auto add_function = [&](const std::string& fname, int arity) {
    auto& table = q.functions[fname];
    for_each_tuple(members, arity, [&](const std::vector<TermId>& args) {
      TermId ft = make_term(fname, args);
      if (!lambda.contains(ft)) return;  // outside the finite fragment
      std::size_t val = q.class_of.at(ft);
      auto [it, fresh] = table.emplace(class_key(args), val);
      if (!fresh && it->second != val)
        throw std::logic_error("herbrand_model: ill-defined function table for " +
                               fname);
    });
  };
  for (const auto& [fname, arity] : sig.functions()) add_function(fname, arity);
  if (reg)
    for (const SkolemSymbol& sym : reg->symbols())
      add_function(sym.name, sym.arity);
  return q;
}

bool quotient_satisfies(const QuotientStructure& q, const Formula& ground) {
  const FormulaNode& n = ground.node();
  switch (n.kind) {
    case FormulaKind::Atom:
    case FormulaKind::NegAtom: {
      std::vector<std::size_t> key(n.args.size());
      for (std::size_t i = 0; i < n.args.size(); ++i)
        key[i] = q.class_of.at(n.args[i]);
      bool val = q.relations.at(symbol_name(n.pred)).at(key);
      return n.kind == FormulaKind::Atom ? val : !val;
    }
    case FormulaKind::Not:
      return !quotient_satisfies(q, ground.left());
    case FormulaKind::And:
      return quotient_satisfies(q, ground.left()) &&
             quotient_satisfies(q, ground.right());
    case FormulaKind::Or:
      return quotient_satisfies(q, ground.left()) ||
             quotient_satisfies(q, ground.right());
    case FormulaKind::Implies:
      return !quotient_satisfies(q, ground.left()) ||
             quotient_satisfies(q, ground.right());
    case FormulaKind::Iff:
      return quotient_satisfies(q, ground.left()) ==
             quotient_satisfies(q, ground.right());
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      throw std::invalid_argument("quotient_satisfies: formula is not ground");
  }
  return false;
}

}  // namespace herbrand
