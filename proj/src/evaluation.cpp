#include "herbrand/evaluation.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

namespace herbrand {

// ── AtomTable ───────────────────────────────────────────────────────────────

namespace {

// Atom indices are computed positionally: predicates in signature order, each
// occupying a block of |Λ|^arity indices, argument tuples in member-index
// lexicographic order.
std::size_t tuple_rank(const std::vector<std::size_t>& ordinals,
                       std::size_t n) {
  std::size_t rank = 0;
  for (std::size_t o : ordinals) rank = rank * n + o;
  return rank;
}

}  // namespace

AtomTable::AtomTable(const TermSet& lambda, const Signature& sig)
    : lambda_(lambda), sig_(&sig) {
  const std::size_t n = lambda_.size();
  std::size_t next = 0;
  for (const auto& [name, arity] : sig.predicates()) {
    SymId pred = intern_symbol(name);
    offsets_.push_back(next);
    pred_ids_.push_back(pred);
    std::size_t block = 1;
    for (int i = 0; i < arity; ++i) block *= n;
    next += block;
    std::vector<std::size_t> odo(arity, 0);
    for (std::size_t r = 0; r < block; ++r) {
      std::vector<TermId> args(arity);
      for (int k = 0; k < arity; ++k) args[k] = lambda_.members()[odo[k]];
      atoms_.push_back({pred, std::move(args)});
      for (int k = arity - 1; k >= 0; --k) {
        if (++odo[k] < n) break;
        odo[k] = 0;
      }
    }
  }
  for (std::size_t i = 0; i < lambda_.members().size(); ++i)
    member_ord_.emplace(lambda_.members()[i], i);
}

std::optional<std::size_t> AtomTable::index_of(
    SymId pred, const std::vector<TermId>& args) const {
  for (std::size_t p = 0; p < pred_ids_.size(); ++p) {
    if (pred_ids_[p] != pred) continue;
    if (static_cast<int>(args.size()) != sig_->predicates()[p].second) break;
    std::vector<std::size_t> ordinals;
    ordinals.reserve(args.size());
    for (TermId t : args) {
      auto it = member_ord_.find(t);
      if (it == member_ord_.end()) return std::nullopt;
      ordinals.push_back(it->second);
    }
    return offsets_[p] + tuple_rank(ordinals, lambda_.size());
  }
  return std::nullopt;
}

std::optional<std::size_t> AtomTable::index_of(const Formula& literal) const {
  const FormulaNode& n = literal.node();
  if (n.kind != FormulaKind::Atom && n.kind != FormulaKind::NegAtom)
    throw std::invalid_argument("expected an atomic formula");
  return index_of(n.pred, n.args);
}

std::string AtomTable::atom_string(std::size_t i) const {
  const Atom& a = atoms_[i];
  const std::string& pred = symbol_name(a.pred);
  if (a.args.size() == 2)
    return to_string(a.args[0]) + " " + pred + " " + to_string(a.args[1]);
  std::string out = pred + "(";
  for (std::size_t k = 0; k < a.args.size(); ++k) {
    if (k) out += ", ";
    out += to_string(a.args[k]);
  }
  return out + ")";
}

// ── Evaluation ──────────────────────────────────────────────────────────────

Evaluation::Evaluation(std::shared_ptr<const AtomTable> table,
                       std::vector<std::uint8_t> bits)
    : table_(std::move(table)), bits_(std::move(bits)) {
  if (bits_.size() != table_->size())
    throw std::invalid_argument("evaluation must assign every atom");
}

bool Evaluation::satisfies(const Formula& g) const {
  const FormulaNode& n = g.node();
  switch (n.kind) {
    case FormulaKind::Atom:
    case FormulaKind::NegAtom: {
      auto idx = table_->index_of(g);
      if (!idx)
        throw std::out_of_range("atom mentions a term outside the table: " +
                                to_string(g));
      bool v = value(*idx);
      return n.kind == FormulaKind::Atom ? v : !v;
    }
    case FormulaKind::Not:
      return !satisfies(g.left());
    case FormulaKind::And:
      return satisfies(g.left()) && satisfies(g.right());
    case FormulaKind::Or:
      return satisfies(g.left()) || satisfies(g.right());
    case FormulaKind::Implies:
      return !satisfies(g.left()) || satisfies(g.right());
    case FormulaKind::Iff:
      return satisfies(g.left()) == satisfies(g.right());
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      throw std::invalid_argument("satisfies expects a quantifier-free formula");
  }
  return false;
}

std::vector<std::vector<TermId>> Evaluation::equivalence_classes() const {
  const auto& members = table_->lambda().members();
  SymId eq = intern_symbol("=");
  std::vector<std::vector<TermId>> classes;
  for (TermId t : members) {
    bool placed = false;
    for (auto& cls : classes) {
      auto idx = table_->index_of(eq, {cls.front(), t});
      if (idx && value(*idx)) {
        cls.push_back(t);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({t});
  }
  return classes;
}

// ── Congruence structure ────────────────────────────────────────────────────

namespace {

// The grounded form of the evaluation conditions over a table:
//   refl        — atom indices that must be 1,
//   replacement — triples (e, a, b): bits[e] = 1 forces bits[a] = bits[b],
//                 where a and b differ by one occurrence of a member replaced
//                 by another member and e is the corresponding equality atom,
//   funcong     — (premise equality atoms, conclusion equality atom) for
//                 same-head composite members with all arguments in Λ.
struct CongruenceStructure {
  std::vector<std::size_t> refl;
  std::vector<std::array<std::size_t, 3>> replacement;
  std::vector<std::pair<std::vector<std::size_t>, std::size_t>> funcong;
};

CongruenceStructure congruence_structure(const AtomTable& table) {
  CongruenceStructure cs;
  const TermSet& lambda = table.lambda();
  SymId eq = intern_symbol("=");

  for (TermId t : lambda.members())
    cs.refl.push_back(*table.index_of(eq, {t, t}));

  std::set<std::array<std::size_t, 3>> seen;
  for (std::size_t a = 0; a < table.size(); ++a) {
    const Atom& atom = table.atom(a);
    for (std::size_t k = 0; k < atom.args.size(); ++k) {
      for (const auto& [pos, sub] : positions(atom.args[k])) {
        if (!lambda.contains(sub)) continue;
        for (TermId s : lambda.members()) {
          if (s == sub) continue;
          TermId replaced = replace_at(atom.args[k], pos, s);
          if (!lambda.contains(replaced)) continue;
          std::vector<TermId> args = atom.args;
          args[k] = replaced;
          auto b = table.index_of(atom.pred, args);
          if (!b) continue;
          std::size_t e = *table.index_of(eq, {sub, s});
          if (seen.insert({e, a, *b}).second)
            cs.replacement.push_back({e, a, *b});
        }
      }
    }
  }

  const auto& members = lambda.members();
  for (TermId u : members) {
    const TermNode& un = term(u);
    if (un.args.empty()) continue;
    bool u_args_in = true;
    for (TermId arg : un.args) u_args_in = u_args_in && lambda.contains(arg);
    if (!u_args_in) continue;
    for (TermId v : members) {
      if (v == u) continue;
      const TermNode& vn = term(v);
      if (vn.head != un.head || vn.args.size() != un.args.size()) continue;
      bool ok = true;
      std::vector<std::size_t> premises;
      for (std::size_t i = 0; i < un.args.size() && ok; ++i) {
        if (un.args[i] == vn.args[i]) continue;
        auto idx = table.index_of(eq, {un.args[i], vn.args[i]});
        if (!idx)
          ok = false;
        else
          premises.push_back(*idx);
      }
      if (!ok) continue;
      cs.funcong.emplace_back(std::move(premises),
                              *table.index_of(eq, {u, v}));
    }
  }
  return cs;
}

bool bits_valid(const CongruenceStructure& cs,
                const std::vector<std::uint8_t>& bits) {
  for (std::size_t i : cs.refl)
    if (!bits[i]) return false;
  for (const auto& [e, a, b] : cs.replacement)
    if (bits[e] && bits[a] != bits[b]) return false;
  for (const auto& [premises, concl] : cs.funcong) {
    bool all = true;
    for (std::size_t i : premises) all = all && bits[i];
    if (all && !bits[concl]) return false;
  }
  return true;
}

}  // namespace

std::vector<std::string> evaluation_violations(const Evaluation& p) {
  const AtomTable& table = p.table();
  CongruenceStructure cs = congruence_structure(table);
  const auto& bits = p.bits();
  std::vector<std::string> out;
  for (std::size_t i : cs.refl)
    if (!bits[i]) out.push_back("reflexivity fails: " + table.atom_string(i));
  for (const auto& [e, a, b] : cs.replacement)
    if (bits[e] && bits[a] != bits[b])
      out.push_back("replacement fails: " + table.atom_string(e) +
                    " but  " + table.atom_string(a) + "  /  " +
                    table.atom_string(b) + "  disagree");
  for (const auto& [premises, concl] : cs.funcong) {
    bool all = true;
    for (std::size_t i : premises) all = all && bits[i];
    if (all && !bits[concl])
      out.push_back("function congruence fails: " + table.atom_string(concl));
  }
  return out;
}

// ── Problem construction ────────────────────────────────────────────────────

namespace {

struct BuiltProblem {
  std::shared_ptr<AtomTable> table;
  std::vector<Clause> clauses;
  std::vector<InstanceInfo> instances;
};

void guard_clause_budget(std::size_t count, const SolverConfig& cfg) {
  if (count > cfg.max_clauses)
    throw ResourceLimitError("clause budget exceeded (" +
                             std::to_string(count) + " > " +
                             std::to_string(cfg.max_clauses) + ")");
}

// Clause sets of a ground And/Or/literal formula, by plain distribution.
std::vector<std::vector<std::int32_t>> cnf_of(const Formula& g,
                                              const AtomTable& table,
                                              const SolverConfig& cfg) {
  const FormulaNode& n = g.node();
  switch (n.kind) {
    case FormulaKind::Atom:
    case FormulaKind::NegAtom: {
      auto idx = table.index_of(g);
      if (!idx)
        throw std::logic_error("available instance mentions atom outside Λ: " +
                               to_string(g));
      std::int32_t lit = static_cast<std::int32_t>(*idx) + 1;
      return {{n.kind == FormulaKind::Atom ? lit : -lit}};
    }
    case FormulaKind::And: {
      auto left = cnf_of(g.left(), table, cfg);
      auto right = cnf_of(g.right(), table, cfg);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
    case FormulaKind::Or: {
      auto left = cnf_of(g.left(), table, cfg);
      auto right = cnf_of(g.right(), table, cfg);
      guard_clause_budget(left.size() * right.size(), cfg);
      std::vector<std::vector<std::int32_t>> out;
      out.reserve(left.size() * right.size());
      for (const auto& c1 : left)
        for (const auto& c2 : right) {
          std::vector<std::int32_t> merged = c1;
          merged.insert(merged.end(), c2.begin(), c2.end());
          out.push_back(std::move(merged));
        }
      return out;
    }
    default:
      throw std::logic_error("instance matrix must be an And/Or/literal tree");
  }
}

// Sort, deduplicate, and drop tautologies; returns false when tautological.
bool tidy_clause(std::vector<std::int32_t>& lits) {
  std::sort(lits.begin(), lits.end(),
            [](std::int32_t a, std::int32_t b) {
              return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b)
                                                : a < b;
            });
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (std::size_t i = 0; i + 1 < lits.size(); ++i)
    if (lits[i] == -lits[i + 1]) return false;
  return true;
}

BuiltProblem build_problem(const std::vector<LabeledFormula>& theory,
                           const TermSet& lambda, SkolemRegistry& reg,
                           const Signature& sig, const SolverConfig& cfg) {
  BuiltProblem prob;
  prob.table = std::make_shared<AtomTable>(lambda, sig);
  CongruenceStructure cs = congruence_structure(*prob.table);

  auto add = [&](std::vector<std::int32_t> lits, Clause::Origin origin,
                 std::uint32_t instance = 0) {
    if (!tidy_clause(lits)) return;
    prob.clauses.push_back({std::move(lits), origin, instance});
    guard_clause_budget(prob.clauses.size(), cfg);
  };
  auto pos = [](std::size_t i) { return static_cast<std::int32_t>(i) + 1; };

  for (std::size_t i : cs.refl) add({pos(i)}, Clause::Origin::Reflexivity);
  for (const auto& [e, a, b] : cs.replacement) {
    add({-pos(e), -pos(a), pos(b)}, Clause::Origin::Replacement);
    add({-pos(e), pos(a), -pos(b)}, Clause::Origin::Replacement);
  }

  // Symmetry and transitivity follow from reflexivity plus replacement, but
  // adding them keeps propagation short and certificates readable.
  SymId eq = intern_symbol("=");
  const auto& members = lambda.members();
  for (TermId t : members)
    for (TermId s : members) {
      if (t == s) continue;
      add({-pos(*prob.table->index_of(eq, {t, s})),
           pos(*prob.table->index_of(eq, {s, t}))},
          Clause::Origin::Symmetry);
      for (TermId u : members) {
        if (u == t || u == s) continue;
        add({-pos(*prob.table->index_of(eq, {t, s})),
             -pos(*prob.table->index_of(eq, {s, u})),
             pos(*prob.table->index_of(eq, {t, u}))},
            Clause::Origin::Transitivity);
      }
    }

  for (const auto& [premises, concl] : cs.funcong) {
    std::vector<std::int32_t> lits;
    for (std::size_t i : premises) lits.push_back(-pos(i));
    lits.push_back(pos(concl));
    add(std::move(lits), Clause::Origin::FunctionCongruence);
  }

  for (const LabeledFormula& lf : theory) {
    for (SkolemInstance& inst :
         available_instances(lf.formula, lambda, reg, sig)) {
      auto idx = static_cast<std::uint32_t>(prob.instances.size());
      for (auto& lits : cnf_of(inst.ground, *prob.table, cfg))
        add(std::move(lits), Clause::Origin::Instance, idx);
      prob.instances.push_back(
          {lf.label, std::move(inst.subst), std::move(inst.ground)});
    }
  }
  return prob;
}

// ── DPLL with clause-set core extraction ────────────────────────────────────

constexpr std::int64_t kUnassigned = -1;
constexpr std::int64_t kDecision = -2;

class Dpll {
 public:
  Dpll(std::size_t n, const std::vector<Clause>& clauses,
       const SolverConfig& cfg)
      : n_(n), cfg_(&cfg) {
    values_.assign(n, 2);
    reason_.assign(n, kUnassigned);
    watches_.assign(2 * n, {});
    lits_.reserve(clauses.size());
    for (const Clause& c : clauses) lits_.push_back(c.lits);
    for (std::size_t ci = 0; ci < lits_.size(); ++ci) {
      if (lits_[ci].size() >= 2) {
        watches_[slot(lits_[ci][0])].push_back(ci);
        watches_[slot(lits_[ci][1])].push_back(ci);
      }
    }
    order_.resize(n);
    for (std::size_t i = 0; i < n; ++i) order_[i] = i;
    if (cfg.seed != 0) {
      // Local Fisher–Yates: stable across standard libraries.
      std::mt19937_64 rng(cfg.seed);
      for (std::size_t i = n; i > 1; --i)
        std::swap(order_[i - 1], order_[rng() % i]);
    }
  }

  struct Fail {
    std::set<std::size_t> clauses;
    std::set<std::size_t> decisions;
  };

  // nullopt: satisfiable, model() total.  Otherwise a core of clause indices
  // (decisions empty at top level).
  std::optional<Fail> solve() {
    for (std::size_t ci = 0; ci < lits_.size(); ++ci) {
      if (lits_[ci].size() != 1) continue;
      std::int32_t lit = lits_[ci][0];
      int v = lit_value(lit);
      if (v == 0) return analyze(ci);
      if (v == 2) assign(lit, static_cast<std::int64_t>(ci));
    }
    return search();
  }

  std::vector<std::uint8_t> model() const {
    std::vector<std::uint8_t> bits(n_);
    for (std::size_t i = 0; i < n_; ++i) bits[i] = values_[i] == 1;
    return bits;
  }

  SearchStats stats;

 private:
  static std::size_t slot(std::int32_t lit) {
    return 2 * static_cast<std::size_t>(std::abs(lit) - 1) + (lit < 0);
  }
  int lit_value(std::int32_t lit) const {  // 0 false, 1 true, 2 unset
    int v = values_[std::abs(lit) - 1];
    if (v == 2) return 2;
    return (lit > 0) == (v == 1);
  }
  void assign(std::int32_t lit, std::int64_t reason) {
    std::size_t var = std::abs(lit) - 1;
    values_[var] = lit > 0;
    reason_[var] = reason;
    trail_.push_back(var);
    if (reason >= 0) ++stats.propagations;
  }

  std::optional<std::size_t> propagate() {
    while (qhead_ < trail_.size()) {
      std::size_t var = trail_[qhead_++];
      std::int32_t falsified = values_[var] == 1
                                   ? -static_cast<std::int32_t>(var + 1)
                                   : static_cast<std::int32_t>(var + 1);
      auto& wl = watches_[slot(falsified)];
      for (std::size_t i = 0; i < wl.size();) {
        std::size_t ci = wl[i];
        auto& lits = lits_[ci];
        if (lits[0] == falsified) std::swap(lits[0], lits[1]);
        if (lit_value(lits[0]) == 1) {
          ++i;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < lits.size(); ++k) {
          if (lit_value(lits[k]) != 0) {
            std::swap(lits[1], lits[k]);
            watches_[slot(lits[1])].push_back(ci);
            wl[i] = wl.back();
            wl.pop_back();
            moved = true;
            break;
          }
        }
        if (moved) continue;
        if (lit_value(lits[0]) == 0) {
          ++stats.conflicts;
          return ci;
        }
        assign(lits[0], static_cast<std::int64_t>(ci));
        ++i;
      }
    }
    return std::nullopt;
  }

  Fail analyze(std::size_t conflict) {
    Fail fail;
    fail.clauses.insert(conflict);
    std::vector<std::size_t> stack;
    std::vector<char> visited(n_, 0);
    for (std::int32_t lit : lits_[conflict])
      stack.push_back(std::abs(lit) - 1);
    while (!stack.empty()) {
      std::size_t var = stack.back();
      stack.pop_back();
      if (visited[var]) continue;
      visited[var] = 1;
      if (reason_[var] == kDecision) {
        fail.decisions.insert(var);
      } else if (reason_[var] >= 0) {
        fail.clauses.insert(static_cast<std::size_t>(reason_[var]));
        for (std::int32_t lit : lits_[static_cast<std::size_t>(reason_[var])])
          stack.push_back(std::abs(lit) - 1);
      }
    }
    return fail;
  }

  std::optional<Fail> search() {
    if (auto conflict = propagate()) return analyze(*conflict);
    std::size_t var = n_;
    for (std::size_t i = next_hint_; i < n_; ++i) {
      if (values_[order_[i]] == 2) {
        var = order_[i];
        next_hint_ = i;
        break;
      }
    }
    if (var == n_) return std::nullopt;

    Fail first;
    for (int phase = 0; phase < 2; ++phase) {
      if (++stats.decisions > cfg_->max_decisions)
        throw ResourceLimitError("decision budget exceeded");
      std::size_t mark = trail_.size();
      std::size_t saved_qhead = qhead_;
      std::size_t saved_hint = next_hint_;
      // First branch is value 1.
      assign(phase == 0 ? static_cast<std::int32_t>(var + 1)
                        : -static_cast<std::int32_t>(var + 1),
             kDecision);
      auto fail = search();
      if (!fail) return std::nullopt;
      while (trail_.size() > mark) {
        std::size_t v = trail_.back();
        trail_.pop_back();
        values_[v] = 2;
        reason_[v] = kUnassigned;
      }
      qhead_ = saved_qhead;
      next_hint_ = saved_hint;
      // A conflict that does not involve this decision refutes the whole
      // enclosing context; pass it through unchanged.
      if (!fail->decisions.count(var)) return fail;
      fail->decisions.erase(var);
      if (phase == 0) {
        first = std::move(*fail);
      } else {
        first.clauses.insert(fail->clauses.begin(), fail->clauses.end());
        first.decisions.insert(fail->decisions.begin(),
                               fail->decisions.end());
        return first;
      }
    }
    return std::nullopt;  // unreachable
  }

  std::size_t n_;
  const SolverConfig* cfg_;
  std::vector<std::uint8_t> values_;
  std::vector<std::int64_t> reason_;
  std::vector<std::vector<std::int32_t>> lits_;
  std::vector<std::vector<std::size_t>> watches_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> trail_;
  std::size_t qhead_ = 0;
  std::size_t next_hint_ = 0;
};

std::string clause_string(const Clause& c, const AtomTable& table) {
  std::string out;
  for (std::size_t i = 0; i < c.lits.size(); ++i) {
    if (i) out += "  |  ";
    if (c.lits[i] < 0) out += "~ ";
    out += table.atom_string(std::abs(c.lits[i]) - 1);
  }
  return out;
}

std::string origin_tag(const Clause& c,
                       const std::vector<InstanceInfo>& instances) {
  switch (c.origin) {
    case Clause::Origin::Reflexivity:
      return "[reflexivity]";
    case Clause::Origin::Replacement:
      return "[replacement]";
    case Clause::Origin::Symmetry:
      return "[symmetry]";
    case Clause::Origin::Transitivity:
      return "[transitivity]";
    case Clause::Origin::FunctionCongruence:
      return "[congruence]";
    case Clause::Origin::Instance: {
      const InstanceInfo& info = instances[c.instance];
      std::string tag = "[" + info.label;
      for (const auto& [v, t] : info.subst)
        tag += " " + symbol_name(v) + ":=" + to_string(t);
      return tag + "]";
    }
  }
  return "[?]";
}

}  // namespace

// ── find_evaluation / enumerate_all ─────────────────────────────────────────

EvalOutcome find_evaluation(const std::vector<LabeledFormula>& theory,
                            const TermSet& lambda, SkolemRegistry& reg,
                            const Signature& sig, const SolverConfig& cfg) {
  if (lambda.empty())
    throw std::invalid_argument("term set must be nonempty");
  BuiltProblem prob = build_problem(theory, lambda, reg, sig, cfg);
  Dpll solver(prob.table->size(), prob.clauses, cfg);
  auto fail = solver.solve();

  EvalOutcome out;
  out.stats = solver.stats;
  out.stats.atoms = prob.table->size();
  out.stats.clauses = prob.clauses.size();
  out.instances = std::move(prob.instances);
  out.atoms = prob.table;

  if (!fail) {
    out.sat = true;
    out.evaluation.emplace(prob.table, solver.model());
    if (!evaluation_violations(*out.evaluation).empty())
      throw std::logic_error("solver produced an invalid evaluation");
    return out;
  }

  out.sat = false;
  Certificate cert;
  std::set<std::size_t> atom_set;
  for (std::size_t ci : fail->clauses) {
    const Clause& c = prob.clauses[ci];
    cert.core.push_back(c);
    cert.lines.push_back(origin_tag(c, out.instances) + "  " +
                         clause_string(c, *prob.table));
    for (std::int32_t lit : c.lits)
      atom_set.insert(static_cast<std::size_t>(std::abs(lit)) - 1);
  }
  cert.atoms.assign(atom_set.begin(), atom_set.end());
  out.certificate = std::move(cert);
  return out;
}

std::vector<Evaluation> enumerate_all(const std::vector<LabeledFormula>& theory,
                                      const TermSet& lambda,
                                      SkolemRegistry& reg, const Signature& sig,
                                      const SolverConfig& cfg) {
  auto table = std::make_shared<AtomTable>(lambda, sig);
  if (table->size() > cfg.exhaustive_atom_limit)
    throw ResourceLimitError("atom table too large for brute force (" +
                             std::to_string(table->size()) + " atoms)");
  CongruenceStructure cs = congruence_structure(*table);
  std::vector<Formula> grounds;
  for (const LabeledFormula& lf : theory)
    for (const SkolemInstance& inst :
         available_instances(lf.formula, lambda, reg, sig))
      grounds.push_back(inst.ground);

  std::vector<Evaluation> found;
  const std::size_t k = table->size();
  std::vector<std::uint8_t> bits(k);
  for (std::uint64_t mask = 0;; ++mask) {
    for (std::size_t i = 0; i < k; ++i) bits[i] = (mask >> i) & 1;
    if (bits_valid(cs, bits)) {
      Evaluation p(table, bits);
      bool ok = true;
      for (const Formula& g : grounds) ok = ok && p.satisfies(g);
      if (ok) found.push_back(std::move(p));
    }
    if (mask + 1 == (std::uint64_t(1) << k)) break;
  }
  return found;
}

bool replay_certificate(const Certificate& cert, std::size_t num_atoms) {
  // Remap the core's atoms to a compact range, then show exhaustively (or by
  // an independent search when large) that the core admits no assignment.
  std::unordered_map<std::size_t, std::size_t> remap;
  for (std::size_t a : cert.atoms) remap.emplace(a, remap.size());
  std::vector<Clause> clauses;
  for (const Clause& c : cert.core) {
    Clause r = c;
    for (std::int32_t& lit : r.lits) {
      std::size_t a = static_cast<std::size_t>(std::abs(lit)) - 1;
      auto it = remap.find(a);
      if (it == remap.end()) return false;  // malformed certificate
      std::int32_t v = static_cast<std::int32_t>(it->second) + 1;
      lit = lit > 0 ? v : -v;
    }
    clauses.push_back(std::move(r));
  }
  (void)num_atoms;
  const std::size_t k = remap.size();
  if (k <= 24) {
    for (std::uint64_t mask = 0;; ++mask) {
      bool all = true;
      for (const Clause& c : clauses) {
        bool sat = false;
        for (std::int32_t lit : c.lits) {
          std::size_t v = static_cast<std::size_t>(std::abs(lit)) - 1;
          bool val = (mask >> v) & 1;
          if ((lit > 0) == val) {
            sat = true;
            break;
          }
        }
        if (!sat) {
          all = false;
          break;
        }
      }
      if (all) return false;  // core satisfiable: replay refutes the claim
      if (mask + 1 == (std::uint64_t(1) << k)) break;
    }
    return true;
  }
  SolverConfig cfg;
  Dpll solver(k, clauses, cfg);
  return solver.solve().has_value();
}

// ── Standard model ──────────────────────────────────────────────────────────

StandardInterpretation StandardInterpretation::builtins() {
  StandardInterpretation interp;
  interp.functions["𝔭"] = [](const std::vector<mpz_class>& a) {
    return a[0] > 0 ? mpz_class(a[0] - 1) : mpz_class(0);
  };
  interp.functions["𝔥"] = [](const std::vector<mpz_class>& a) {
    return a[0] <= a[1] ? mpz_class(a[1] - a[0]) : mpz_class(0);
  };
  interp.functions["𝔮"] = [](const std::vector<mpz_class>& a) {
    return mpz_class(a[0] * a[0]);
  };
  return interp;
}

void StandardInterpretation::set_constant(std::string name, mpz_class value) {
  functions[std::move(name)] = [value = std::move(value)](
                                   const std::vector<mpz_class>&) {
    return value;
  };
}

namespace {

mpz_class standard_value(TermId id, const StandardInterpretation& interp,
                         std::unordered_map<TermId, mpz_class>& memo) {
  if (auto it = memo.find(id); it != memo.end()) return it->second;
  const TermNode& n = term(id);
  std::vector<mpz_class> args;
  args.reserve(n.args.size());
  for (TermId a : n.args) args.push_back(standard_value(a, interp, memo));
  const std::string& name = symbol_name(n.head);
  mpz_class value;
  if (name == "0")
    value = 0;
  else if (name == "S")
    value = args[0] + 1;
  else if (name == "+")
    value = args[0] + args[1];
  else if (name == "*")
    value = args[0] * args[1];
  else if (auto it = interp.functions.find(name); it != interp.functions.end())
    value = it->second(args);
  else
    throw MissingInterpretationError("no interpretation for symbol '" + name +
                                     "'");
  memo.emplace(id, value);
  return value;
}

}  // namespace

Evaluation standard_evaluation(const TermSet& lambda,
                               const StandardInterpretation& interp,
                               const Signature& sig) {
  auto table = std::make_shared<AtomTable>(lambda, sig);
  std::unordered_map<TermId, mpz_class> memo;
  std::vector<std::uint8_t> bits(table->size());
  for (std::size_t i = 0; i < table->size(); ++i) {
    const Atom& a = table->atom(i);
    const std::string& pred = symbol_name(a.pred);
    if (a.args.size() != 2 || (pred != "=" && pred != "<="))
      throw MissingInterpretationError("no interpretation for predicate '" +
                                       pred + "'");
    mpz_class l = standard_value(a.args[0], interp, memo);
    mpz_class r = standard_value(a.args[1], interp, memo);
    bits[i] = pred == "=" ? l == r : l <= r;
  }
  return Evaluation(std::move(table), std::move(bits));
}

}  // namespace herbrand
