#include "herbrand/term.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace herbrand {

namespace {

// ── Symbol table ─────────────────────────────────────────────────────────────

struct SymbolTable {
  std::deque<std::string> names;
  std::unordered_map<std::string_view, SymId> index;
  mutable std::shared_mutex mu;

  SymId intern(std::string_view name) {
    {
      std::shared_lock lock(mu);
      if (auto it = index.find(name); it != index.end()) return it->second;
    }
    std::unique_lock lock(mu);
    if (auto it = index.find(name); it != index.end()) return it->second;
    names.emplace_back(name);
    SymId id = static_cast<SymId>(names.size() - 1);
    index.emplace(names.back(), id);
    return id;
  }

  const std::string& name(SymId id) const {
    std::shared_lock lock(mu);
    return names[id];
  }
};

SymbolTable& symbols() {
  static SymbolTable table;
  return table;
}

// ── Term arena ───────────────────────────────────────────────────────────────

struct TermNodeHash {
  std::size_t operator()(const TermNode& n) const {
    std::size_t h = std::hash<SymId>()(n.head);
    for (TermId a : n.args) h = h * 1000003u ^ std::hash<TermId>()(a);
    return h;
  }
};

struct TermArena {
  std::deque<TermNode> nodes;
  std::unordered_map<TermNode, TermId, TermNodeHash> index;
  mutable std::shared_mutex mu;

  TermId intern(TermNode node) {
    {
      std::shared_lock lock(mu);
      if (auto it = index.find(node); it != index.end()) return it->second;
    }
    std::unique_lock lock(mu);
    if (auto it = index.find(node); it != index.end()) return it->second;
    nodes.push_back(node);
    TermId id = static_cast<TermId>(nodes.size() - 1);
    index.emplace(std::move(node), id);
    return id;
  }

  const TermNode& node(TermId id) const {
    std::shared_lock lock(mu);
    return nodes[id];
  }
};

TermArena& arena() {
  static TermArena a;
  return a;
}

}  // namespace

SymId intern_symbol(std::string_view name) { return symbols().intern(name); }

const std::string& symbol_name(SymId sym) { return symbols().name(sym); }

TermId make_term(SymId head, std::vector<TermId> args) {
  return arena().intern(TermNode{head, std::move(args)});
}

TermId make_term(std::string_view head, std::vector<TermId> args) {
  return make_term(intern_symbol(head), std::move(args));
}

const TermNode& term(TermId id) { return arena().node(id); }

const std::string& term_head(TermId id) { return symbol_name(term(id).head); }

void append_subterm_occurrences(TermId id, std::vector<TermId>& out) {
  out.push_back(id);
  for (TermId a : term(id).args) append_subterm_occurrences(a, out);
}

std::vector<TermId> subterms(TermId id) {
  std::vector<TermId> occ;
  append_subterm_occurrences(id, occ);
  std::vector<TermId> unique;
  for (TermId t : occ) {
    bool seen = false;
    for (TermId u : unique)
      if (u == t) { seen = true; break; }
    if (!seen) unique.push_back(t);
  }
  return unique;
}

namespace {
void collect_positions(TermId id, TermPos& path,
                       std::vector<std::pair<TermPos, TermId>>& out) {
  out.emplace_back(path, id);
  const auto& args = term(id).args;
  for (std::size_t i = 0; i < args.size(); ++i) {
    path.push_back(static_cast<std::uint8_t>(i));
    collect_positions(args[i], path, out);
    path.pop_back();
  }
}
}  // namespace

std::vector<std::pair<TermPos, TermId>> positions(TermId id) {
  std::vector<std::pair<TermPos, TermId>> out;
  TermPos path;
  collect_positions(id, path, out);
  return out;
}

TermId replace_at(TermId id, const TermPos& pos, TermId replacement) {
  if (pos.empty()) return replacement;
  const TermNode& n = term(id);
  std::vector<TermId> args = n.args;
  TermPos tail(pos.begin() + 1, pos.end());
  args[pos[0]] = replace_at(args[pos[0]], tail, replacement);
  return make_term(n.head, std::move(args));
}

TermId substitute(TermId id,
                  const std::vector<std::pair<SymId, TermId>>& map) {
  const TermNode& n = term(id);
  if (n.args.empty()) {
    for (const auto& [sym, to] : map)
      if (sym == n.head) return to;
    return id;
  }
  std::vector<TermId> args;
  args.reserve(n.args.size());
  bool changed = false;
  for (TermId a : n.args) {
    TermId b = substitute(a, map);
    changed |= (b != a);
    args.push_back(b);
  }
  return changed ? make_term(n.head, std::move(args)) : id;
}

namespace {
void print_term(TermId id, std::string& out) {
  const TermNode& n = term(id);
  const std::string& head = symbol_name(n.head);
  if (n.args.size() == 2 && (head == "+" || head == "*")) {
    out += '(';
    print_term(n.args[0], out);
    out += ' ';
    out += head;
    out += ' ';
    print_term(n.args[1], out);
    out += ')';
    return;
  }
  out += head;
  if (n.args.empty()) return;
  out += '(';
  for (std::size_t i = 0; i < n.args.size(); ++i) {
    if (i) out += ", ";
    print_term(n.args[i], out);
  }
  out += ')';
}
}  // namespace

std::string to_string(TermId id) {
  std::string out;
  print_term(id, out);
  return out;
}

}  // namespace herbrand
