// ═══════════════════════════════════════════════════════════════════════════
// herbrand_cli.cpp — the `herbrand` command-line tool
//
// One subcommand per run: skolemize | prove | eval | close | omega |
// check-lemma1 | lemma2-witness | code.  Results go to stdout; --format json
// emits a single document whose bytes depend only on the invocation (flags
// and seed included), so runs are reproducible and diffable.  Diagnostics go
// to stderr.
//
// Exit codes:
//   0   success (for `prove`: the goal was proved)
//   1   `prove` found an evaluation (the finite search refutes nothing)
//   2   `prove` exhausted its budgets without deciding
//   64  usage error (unknown flags, missing required options)
//   65  malformed or out-of-range input data (parse errors, domain errors,
//       budget overflows outside `prove`)
//   66  an input file could not be opened
//   70  internal invariant violation
// ═══════════════════════════════════════════════════════════════════════════

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "herbrand/coding.hpp"
#include "herbrand/evaluation.hpp"
#include "herbrand/hierarchy.hpp"
#include "herbrand/normalize.hpp"
#include "herbrand/parser.hpp"
#include "herbrand/skolem.hpp"
#include "herbrand/theories.hpp"
#include "herbrand/universe.hpp"

namespace hb = herbrand;
using json = nlohmann::ordered_json;

namespace {

struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Everything a subcommand can consume, bound to flags once.
struct RunConfig {
  std::string format = "human";  // human | json
  std::string theory;            // q | idelta0:<file> | <axiom-file>
  std::string goal_file;
  std::string lambda_file;
  std::string formula_file;
  std::uint64_t seed = 0;
  int max_depth = 2;
  int depth = 1;  // `close`
  std::size_t max_clauses = hb::SolverConfig{}.max_clauses;
  std::size_t level_budget = hb::UniverseConfig{}.level_budget;
  std::size_t bit_budget = hb::kDefaultBitBudget;
  std::string code_budget;  // decimal, empty = none
  bool skolem_threshold = false;
  int m = 0;
  int big_n = 1;
  int samples = 4;
  std::string x;  // decimal
  int iter = 0;
  bool inverse = false;
  int universe_n = -1;
  int pairs = 0;
};

bool json_mode(const RunConfig& rc) { return rc.format == "json"; }

void emit(const RunConfig& rc, const json& doc, const std::string& human) {
  if (json_mode(rc))
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << human;
}

hb::TheoryPreset load_theory(const std::string& spec, hb::SkolemRegistry& reg,
                             const hb::Signature& sig) {
  if (spec == "q") return hb::preset_q(reg, sig);
  if (spec.rfind("idelta0:", 0) == 0) {
    hb::TheoryPreset t = hb::preset_q(reg, sig);
    hb::pin_square_names(reg, sig);
    t.name = spec;
    hb::Scope scope{&sig, &reg};
    std::vector<hb::Formula> thetas =
        hb::parse_formula_lines(read_file(spec.substr(8)), scope);
    int i = 0;
    for (const hb::Formula& theta : thetas) {
      std::vector<hb::SymId> fv = hb::free_vars(theta, scope);
      if (fv.size() != 1)
        throw std::invalid_argument(
            "induction formulas need exactly one free variable");
      std::string label = i == 0 ? "B" : "B" + std::to_string(i + 1);
      t.axioms.push_back({label, hb::induction_instance(theta, fv[0], scope)});
      ++i;
    }
    if (i == 0) throw std::invalid_argument("no induction formulas in file");
    return t;
  }
  hb::Scope scope{&sig, &reg};
  hb::TheoryPreset t;
  t.name = spec;
  int i = 0;
  for (const hb::Formula& f :
       hb::parse_formula_lines(read_file(spec), scope))
    t.axioms.push_back({"T" + std::to_string(++i), f});
  if (i == 0) throw std::invalid_argument("no formulas in theory file");
  return t;
}

hb::Formula load_goal(const std::string& path, const hb::Scope& scope) {
  std::vector<hb::Formula> fs = hb::parse_formula_lines(read_file(path), scope);
  if (fs.size() != 1)
    throw std::invalid_argument("goal file must contain exactly one formula");
  return fs[0];
}

hb::TermSet load_lambda(const std::string& path, const hb::Scope& scope) {
  hb::TermSet set;
  for (hb::TermId t : hb::parse_term_lines(read_file(path), scope))
    set.insert(t);
  return set;
}

hb::BigNat parse_bignat(const std::string& text, const char* what) {
  try {
    return hb::BigNat(text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(std::string(what) + ": not a decimal number");
  }
}

json registry_json(const hb::SkolemRegistry& reg) {
  json arr = json::array();
  for (const hb::SkolemSymbol& s : reg.symbols())
    arr.push_back({{"name", s.name},
                   {"arity", s.arity},
                   {"source", hb::to_string(s.source)}});
  return arr;
}

std::string registry_human(const hb::SkolemRegistry& reg) {
  std::ostringstream os;
  os << "registry (" << reg.symbols().size() << " symbols):\n";
  for (const hb::SkolemSymbol& s : reg.symbols())
    os << "  " << s.name << "/" << s.arity << "  for  "
       << hb::to_string(s.source) << "\n";
  return os.str();
}

json classes_json(const hb::Evaluation& p) {
  json cls = json::array();
  for (const auto& klass : p.equivalence_classes()) {
    json one = json::array();
    for (hb::TermId t : klass) one.push_back(hb::to_string(t));
    cls.push_back(std::move(one));
  }
  return cls;
}

json stats_json(const hb::SearchStats& st) {
  return {{"atoms", st.atoms},
          {"clauses", st.clauses},
          {"decisions", st.decisions},
          {"propagations", st.propagations},
          {"conflicts", st.conflicts}};
}

// ── skolemize ───────────────────────────────────────────────────────────────

int run_skolemize(const RunConfig& rc) {
  hb::Signature sig = hb::Signature::arithmetic();
  hb::SkolemRegistry reg;
  hb::Scope scope{&sig, &reg};

  std::vector<hb::LabeledFormula> inputs;
  if (!rc.theory.empty())
    for (auto& ax : load_theory(rc.theory, reg, sig).axioms)
      inputs.push_back(ax);
  if (!rc.formula_file.empty()) {
    int i = 0;
    for (const hb::Formula& f :
         hb::parse_formula_lines(read_file(rc.formula_file), scope))
      inputs.push_back({"F" + std::to_string(++i), f});
  }
  if (inputs.empty())
    throw std::invalid_argument("skolemize needs --theory and/or --formula");

  json out = {{"command", "skolemize"}, {"formulas", json::array()}};
  std::ostringstream human;
  for (auto& [label, f] : inputs) {
    hb::Skolemization sk = hb::skolemize(f, reg, sig);
    out["formulas"].push_back({{"label", label},
                               {"input", hb::to_string(f)},
                               {"rnnf", hb::to_string(sk.rnnf)},
                               {"skolem", hb::to_string(sk.matrix)}});
    human << label << ": " << hb::to_string(f) << "\n"
          << "  rnnf:   " << hb::to_string(sk.rnnf) << "\n"
          << "  skolem: " << hb::to_string(sk.matrix) << "\n";
  }
  if (!rc.goal_file.empty()) {
    hb::Formula goal = load_goal(rc.goal_file, scope);
    reg.set_goal_naming(true);
    hb::Skolemization sk = hb::skolemize(hb::neg(goal), reg, sig);
    reg.set_goal_naming(false);
    out["goal"] = {{"input", hb::to_string(goal)},
                   {"negated_rnnf", hb::to_string(sk.rnnf)},
                   {"skolem", hb::to_string(sk.matrix)}};
    human << "goal: " << hb::to_string(goal) << "\n"
          << "  negated rnnf: " << hb::to_string(sk.rnnf) << "\n"
          << "  skolem:       " << hb::to_string(sk.matrix) << "\n";
  }
  out["registry"] = registry_json(reg);
  human << registry_human(reg);
  emit(rc, out, human.str());
  return 0;
}

// ── prove ───────────────────────────────────────────────────────────────────

int run_prove(const RunConfig& rc) {
  hb::Signature sig = hb::Signature::arithmetic();
  hb::SkolemRegistry reg;
  hb::Scope scope{&sig, &reg};

  hb::TheoryPreset theory = load_theory(rc.theory, reg, sig);
  hb::Formula goal = load_goal(rc.goal_file, scope);

  hb::UniverseConfig cfg;
  cfg.max_depth = rc.max_depth;
  cfg.level_budget = rc.level_budget;
  cfg.skolem_code_threshold = rc.skolem_threshold;
  if (!rc.code_budget.empty())
    cfg.code_budget = parse_bignat(rc.code_budget, "--code-budget");
  cfg.solver.seed = rc.seed;
  cfg.solver.max_clauses = rc.max_clauses;

  std::optional<hb::TermSet> lambda;
  if (!rc.lambda_file.empty()) lambda = load_lambda(rc.lambda_file, scope);

  hb::ProveResult res =
      hb::herbrand_prove(theory.axioms, goal, reg, sig, cfg, lambda);

  const char* status = res.status == hb::ProveStatus::Proved ? "proved"
                       : res.status == hb::ProveStatus::EvaluationFound
                           ? "evaluation-found"
                           : "budget-exhausted";

  json out = {{"command", "prove"},
              {"theory", theory.name},
              {"goal", hb::to_string(goal)},
              {"status", status},
              {"stage", res.stage},
              {"lambda_sizes", res.lambda_sizes},
              {"closure_truncated", res.closure_truncated}};
  std::ostringstream human;
  human << "status: " << status << "  (stage " << res.stage << ", |Λ| per stage:";
  for (std::size_t s : res.lambda_sizes) human << " " << s;
  human << ")\n";
  if (!res.note.empty()) {
    out["note"] = res.note;
    human << "note: " << res.note << "\n";
  }
  if (res.outcome) {
    out["stats"] = stats_json(res.outcome->stats);
    if (res.outcome->certificate) {
      out["certificate"] = res.outcome->certificate->lines;
      human << "certificate (" << res.outcome->certificate->lines.size()
            << " lines):\n";
      for (const std::string& line : res.outcome->certificate->lines)
        human << "  " << line << "\n";
    }
    if (res.outcome->evaluation) {
      out["classes"] = classes_json(*res.outcome->evaluation);
      human << "evaluation on " << res.outcome->stats.atoms << " atoms, "
            << out["classes"].size() << " classes\n";
    }
  }
  emit(rc, out, human.str());
  return res.status == hb::ProveStatus::Proved ? 0
         : res.status == hb::ProveStatus::EvaluationFound ? 1
                                                          : 2;
}

// ── eval ────────────────────────────────────────────────────────────────────

int run_eval(const RunConfig& rc) {
  hb::Signature sig = hb::Signature::arithmetic();
  hb::SkolemRegistry reg;
  hb::Scope scope{&sig, &reg};

  hb::TheoryPreset theory = load_theory(rc.theory, reg, sig);
  hb::TermSet lambda = load_lambda(rc.lambda_file, scope);

  hb::SolverConfig cfg;
  cfg.seed = rc.seed;
  cfg.max_clauses = rc.max_clauses;
  hb::EvalOutcome out = hb::find_evaluation(theory.axioms, lambda, reg, sig, cfg);

  json doc = {{"command", "eval"},
              {"theory", theory.name},
              {"status", out.sat ? "sat" : "unsat"},
              {"stats", stats_json(out.stats)}};
  std::ostringstream human;
  human << "status: " << (out.sat ? "sat" : "unsat") << "  (" << out.stats.atoms
        << " atoms, " << out.instances.size() << " available instances)\n";
  if (out.sat) {
    json atoms = json::array();
    for (std::size_t i = 0; i < out.stats.atoms; ++i)
      atoms.push_back({{"atom", out.atoms->atom_string(i)},
                       {"value", out.evaluation->value(i) ? 1 : 0}});
    doc["atoms"] = std::move(atoms);
    doc["classes"] = classes_json(*out.evaluation);
    human << doc["classes"].size() << " equivalence classes:\n";
    for (const auto& klass : out.evaluation->equivalence_classes()) {
      human << "  {";
      for (std::size_t i = 0; i < klass.size(); ++i)
        human << (i ? ", " : " ") << hb::to_string(klass[i]);
      human << " }\n";
    }
  } else {
    doc["certificate"] = out.certificate->lines;
    human << "certificate (" << out.certificate->lines.size() << " lines):\n";
    for (const std::string& line : out.certificate->lines)
      human << "  " << line << "\n";
  }
  emit(rc, doc, human.str());
  return 0;
}

// ── close ───────────────────────────────────────────────────────────────────

int run_close(const RunConfig& rc) {
  hb::Signature sig = hb::Signature::arithmetic();
  hb::SkolemRegistry reg;
  hb::Scope scope{&sig, &reg};

  if (!rc.theory.empty()) load_theory(rc.theory, reg, sig);
  hb::TermSet lambda = load_lambda(rc.lambda_file, scope);

  hb::UniverseConfig cfg;
  cfg.level_budget = rc.level_budget;
  cfg.skolem_code_threshold = rc.skolem_threshold;
  if (!rc.code_budget.empty())
    cfg.code_budget = parse_bignat(rc.code_budget, "--code-budget");

  hb::ClosureResult res =
      hb::close_universe(lambda, rc.depth, sig,
                         rc.theory.empty() ? nullptr : &reg, cfg);

  json members = json::array();
  for (hb::TermId t : res.set.members()) members.push_back(hb::to_string(t));
  json doc = {{"command", "close"},
              {"levels", res.level_sizes},
              {"truncated", res.truncated},
              {"members", std::move(members)}};
  std::ostringstream human;
  human << "levels:";
  for (std::size_t s : res.level_sizes) human << " " << s;
  human << (res.truncated ? "  (truncated)" : "") << "\n";
  std::size_t next_level = 0, count = 0;
  for (hb::TermId t : res.set.members()) {
    while (next_level < res.level_sizes.size() &&
           count == (next_level == 0 ? 0 : res.level_sizes[next_level]))
      ++next_level;
    human << "  " << hb::to_string(t) << "\n";
    ++count;
  }
  emit(rc, doc, human.str());
  return 0;
}

// ── omega ───────────────────────────────────────────────────────────────────

int run_omega(const RunConfig& rc) {
  hb::BigNat x = parse_bignat(rc.x, "x");
  hb::BigNat value;
  if (rc.inverse)
    value = hb::varpi(rc.m, x, rc.bit_budget);
  else if (rc.iter > 0)
    value = hb::omega_iter(rc.m, rc.iter, x, rc.bit_budget);
  else
    value = hb::omega(rc.m, x, rc.bit_budget);

  json doc = {{"command", "omega"},
              {"m", rc.m},
              {"x", x.get_str()},
              {"inverse", rc.inverse},
              {"iter", rc.iter},
              {"value", value.get_str()},
              {"bits", hb::bit_length(value)}};
  emit(rc, doc, value.get_str() + "\n");
  return 0;
}

// ── check-lemma1 ────────────────────────────────────────────────────────────

json lemma_report_json(const hb::LemmaReport& r) {
  json samples = json::array();
  for (const hb::LemmaSample& s : r.samples)
    samples.push_back({{"bits", hb::bit_length(s.x)},
                       {"direct", s.direct},
                       {"holds", s.holds}});
  json witnesses = json::array();
  for (const auto& [x, y] : r.witnesses)
    witnesses.push_back(
        {{"x_bits", hb::bit_length(x)}, {"y", y.get_str()}});
  json doc = {{"lemma", r.lemma},
              {"m", r.m},
              {"N", r.big_n},
              {"samples", std::move(samples)},
              {"violations", r.violations.size()},
              {"partial", r.partial}};
  if (r.lemma == 2) doc["witnesses"] = std::move(witnesses);
  if (!r.note.empty()) doc["note"] = r.note;
  return doc;
}

std::string lemma_report_human(const hb::LemmaReport& r) {
  std::ostringstream os;
  os << "lemma " << r.lemma << "  m=" << r.m << "  N=" << r.big_n << "\n";
  for (std::size_t i = 0; i < r.samples.size(); ++i) {
    const hb::LemmaSample& s = r.samples[i];
    os << "  sample " << i << ": " << hb::bit_length(s.x) << "-bit x, "
       << (s.direct ? "direct" : "log-route") << ", "
       << (s.holds ? "holds" : "VIOLATION") << "\n";
  }
  for (const auto& [x, y] : r.witnesses)
    os << "  witness for " << hb::bit_length(x) << "-bit x: y has "
       << hb::bit_length(y) << " bits\n";
  os << "violations: " << r.violations.size()
     << (r.partial ? "  (partial)" : "") << "\n";
  if (!r.note.empty()) os << "note: " << r.note;
  return os.str();
}

int run_check_lemma1(const RunConfig& rc) {
  hb::LemmaReport r =
      hb::check_lemma1(rc.m, rc.big_n, rc.samples, rc.seed, rc.bit_budget);
  emit(rc, lemma_report_json(r), lemma_report_human(r));
  return 0;
}

// ── lemma2-witness ──────────────────────────────────────────────────────────

int run_lemma2_witness(const RunConfig& rc) {
  hb::BigNat x = parse_bignat(rc.x, "--x");
  hb::BigNat y = hb::find_lemma2_witness(rc.m, rc.big_n, x, rc.bit_budget);
  json doc = {{"command", "lemma2-witness"},
              {"m", rc.m},
              {"N", rc.big_n},
              {"x", x.get_str()},
              {"y", y.get_str()},
              {"y_bits", hb::bit_length(y)},
              {"verified", true}};
  std::ostringstream human;
  human << "y = " << y.get_str() << "\n"
        << "verified: ω_" << rc.m << "^" << rc.big_n << "(y) < x ≤ ω_"
        << (rc.m + 1) << "(y), y ≤ x\n";
  emit(rc, doc, human.str());
  return 0;
}

// ── code ────────────────────────────────────────────────────────────────────

int run_code(const RunConfig& rc) {
  hb::Signature sig = hb::Signature::arithmetic();
  hb::SkolemRegistry reg;
  hb::Scope scope{&sig, &reg};
  if (!rc.theory.empty()) load_theory(rc.theory, reg, sig);

  json doc = {{"command", "code"}};
  std::ostringstream human;

  auto value_field = [](const hb::GodelCode& c) -> json {
    json j = {{"bits", hb::bit_length(c.value)}};
    if (hb::bit_length(c.value) <= 64) j["value"] = c.value.get_str();
    return j;
  };

  if (!rc.lambda_file.empty()) {
    hb::TermSet lambda = load_lambda(rc.lambda_file, scope);
    json members = json::array();
    std::vector<hb::GodelCode> codes;
    for (hb::TermId t : lambda.members()) {
      hb::GodelCode c = hb::code_term(t);
      json j = value_field(c);
      j["term"] = hb::to_string(t);
      members.push_back(std::move(j));
      human << "  ⌈" << hb::to_string(t) << "⌉: " << hb::bit_length(c.value)
            << " bits\n";
      codes.push_back(std::move(c));
    }
    hb::GodelCode set_code = hb::code_term_set(lambda);
    doc["members"] = std::move(members);
    doc["set"] = value_field(set_code);
    // |A| ≤ log₂⌈A⌉, using the exact bit length
    bool card_ok = hb::BigNat(lambda.size()) <
                   hb::BigNat(static_cast<unsigned long>(
                       hb::bit_length(set_code.value)));
    doc["cardinality_bound"] = {{"size", lambda.size()},
                                {"code_bits", hb::bit_length(set_code.value)},
                                {"holds", card_ok}};
    human << "set code: " << hb::bit_length(set_code.value) << " bits; |Λ|="
          << lambda.size() << " ≤ log₂⌈Λ⌉: " << (card_ok ? "yes" : "NO")
          << "\n";
    if (rc.universe_n >= 0) {
      hb::PBoundCheck u = hb::check_universe_code_bound(lambda, rc.universe_n);
      doc["universe_bound"] = {{"n", rc.universe_n},
                               {"exponent", u.exponent},
                               {"holds", u.holds},
                               {"partial", u.partial}};
      if (!u.note.empty()) doc["universe_bound"]["note"] = u.note;
      human << "universe bound (n=" << rc.universe_n
            << "): " << (u.holds ? "holds" : "FAILS") << " with exponent "
            << u.exponent << (u.partial ? " (partial)" : "") << "\n";
    }
    if (rc.pairs >= 1) {
      hb::PBoundCheck p = hb::cartesian_power_bound(codes, rc.pairs);
      doc["cartesian_bound"] = {{"m", rc.pairs},
                                {"exponent", p.exponent},
                                {"holds", p.holds},
                                {"partial", p.partial}};
      human << "cartesian bound (m=" << rc.pairs
            << "): " << (p.holds ? "holds" : "FAILS") << " with exponent "
            << p.exponent << (p.partial ? " (partial)" : "") << "\n";
    }
  }
  if (!rc.formula_file.empty()) {
    json formulas = json::array();
    int i = 0;
    for (const hb::Formula& f :
         hb::parse_formula_lines(read_file(rc.formula_file), scope)) {
      hb::GodelCode c = hb::code_formula(f);
      json j = value_field(c);
      j["formula"] = hb::to_string(f);
      formulas.push_back(std::move(j));
      human << "  ⌈" << hb::to_string(f) << "⌉: " << hb::bit_length(c.value)
            << " bits\n";
      ++i;
    }
    doc["formulas"] = std::move(formulas);
  }
  if (rc.lambda_file.empty() && rc.formula_file.empty())
    throw std::invalid_argument("code needs --lambda and/or --formula");
  emit(rc, doc, human.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Herbrand-consistency toolkit for first-order arithmetic"};
  app.require_subcommand(1);
  RunConfig rc;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", rc.format, "human | json")
        ->check(CLI::IsMember({"human", "json"}));
  };

  CLI::App* sk = app.add_subcommand("skolemize", "Skolemize formulas");
  sk->add_option("--theory", rc.theory, "q | idelta0:<file> | axiom file");
  sk->add_option("--formula", rc.formula_file, "formula file (one per line)");
  sk->add_option("--goal", rc.goal_file, "goal sentence file (negated form)");
  add_format(sk);

  CLI::App* pv = app.add_subcommand("prove", "Semi-decide theory ⊢ goal");
  pv->add_option("--theory", rc.theory)->required();
  pv->add_option("--goal", rc.goal_file)->required();
  pv->add_option("--lambda", rc.lambda_file, "skip closure, use this term set");
  pv->add_option("--max-depth", rc.max_depth, "closure stages");
  pv->add_option("--seed", rc.seed);
  pv->add_option("--max-clauses", rc.max_clauses);
  pv->add_option("--level-budget", rc.level_budget);
  pv->add_option("--code-budget", rc.code_budget, "decimal term-code cap");
  pv->add_flag("--skolem-threshold", rc.skolem_threshold,
               "gate Skolem symbols by source-formula code per level");
  add_format(pv);

  CLI::App* ev = app.add_subcommand("eval", "Search a theory-evaluation on Λ");
  ev->add_option("--theory", rc.theory)->required();
  ev->add_option("--lambda", rc.lambda_file)->required();
  ev->add_option("--seed", rc.seed);
  ev->add_option("--max-clauses", rc.max_clauses);
  add_format(ev);

  CLI::App* cl = app.add_subcommand("close", "Compute Λ^⟨k⟩");
  cl->add_option("--lambda", rc.lambda_file)->required();
  cl->add_option("-k,--depth", rc.depth, "closure steps");
  cl->add_option("--theory", rc.theory, "include this theory's Skolem symbols");
  cl->add_option("--level-budget", rc.level_budget);
  cl->add_option("--code-budget", rc.code_budget);
  cl->add_flag("--skolem-threshold", rc.skolem_threshold);
  add_format(cl);

  CLI::App* om = app.add_subcommand("omega", "Evaluate ω_m(x) and relatives");
  om->add_option("m", rc.m, "level (≥ -1)")->required();
  om->add_option("x", rc.x, "argument (decimal)")->required();
  om->add_option("--iter", rc.iter, "N-fold iterate ω_m^N");
  om->add_flag("--inverse", rc.inverse, "the inverse ϖ_m instead");
  om->add_option("--bit-budget", rc.bit_budget);
  add_format(om);

  CLI::App* l1 = app.add_subcommand("check-lemma1", "Sample ω_m^N < ω_{m+1}");
  l1->add_option("--m", rc.m)->required();
  l1->add_option("--N", rc.big_n)->required();
  l1->add_option("--samples", rc.samples);
  l1->add_option("--seed", rc.seed);
  l1->add_option("--bit-budget", rc.bit_budget);
  add_format(l1);

  CLI::App* l2 = app.add_subcommand("lemma2-witness",
                                    "Find y with ω_m^N(y) < x ≤ ω_{m+1}(y)");
  l2->add_option("--m", rc.m)->required();
  l2->add_option("--N", rc.big_n)->required();
  l2->add_option("--x", rc.x, "decimal")->required();
  l2->add_option("--bit-budget", rc.bit_budget);
  add_format(l2);

  CLI::App* co = app.add_subcommand("code", "Gödel codes and size bounds");
  co->add_option("--lambda", rc.lambda_file);
  co->add_option("--formula", rc.formula_file);
  co->add_option("--theory", rc.theory, "register Skolem names first");
  co->add_option("--universe-n", rc.universe_n,
                 "check ⌈Λ^⟨j⟩⌉ bounds for j ≤ n");
  co->add_option("--pairs", rc.pairs, "check ⌈Λ^m⌉ bounds");
  add_format(co);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 64;
  }

  try {
    if (sk->parsed()) return run_skolemize(rc);
    if (pv->parsed()) return run_prove(rc);
    if (ev->parsed()) return run_eval(rc);
    if (cl->parsed()) return run_close(rc);
    if (om->parsed()) return run_omega(rc);
    if (l1->parsed()) return run_check_lemma1(rc);
    if (l2->parsed()) return run_lemma2_witness(rc);
    if (co->parsed()) return run_code(rc);
    std::cerr << "usage error: no subcommand\n";
    return 64;
  } catch (const FileError& e) {
    std::cerr << "file error: " << e.what() << "\n";
    return 66;
  } catch (const hb::ParseError& e) {
    std::cerr << "parse error at byte " << e.pos() << ": " << e.what() << "\n";
    return 65;
  } catch (const hb::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 65;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 65;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 65;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
}
