#include "herbrand/signature.hpp"

#include <algorithm>

namespace herbrand {

Signature Signature::arithmetic() {
  Signature sig;
  sig.add_constant("0");
  sig.add_function("S", 1);
  sig.add_function("+", 2);
  sig.add_function("*", 2);
  sig.add_predicate("=", 2);
  sig.add_predicate("<=", 2);
  return sig;
}

void Signature::add_constant(std::string_view name) {
  functions_.emplace_back(std::string(name), 0);
}

void Signature::add_function(std::string_view name, int arity) {
  functions_.emplace_back(std::string(name), arity);
}

void Signature::add_predicate(std::string_view name, int arity) {
  predicates_.emplace_back(std::string(name), arity);
}

bool Signature::is_constant(std::string_view name) const {
  auto a = function_arity(name);
  return a.has_value() && *a == 0;
}

std::optional<int> Signature::function_arity(std::string_view name) const {
  for (const auto& [n, a] : functions_)
    if (n == name) return a;
  return std::nullopt;
}

std::optional<int> Signature::predicate_arity(std::string_view name) const {
  for (const auto& [n, a] : predicates_)
    if (n == name) return a;
  return std::nullopt;
}

std::optional<int> Scope::function_arity(std::string_view name) const {
  if (sig)
    if (auto a = sig->function_arity(name)) return a;
  if (skolem)
    if (auto a = skolem->arity_of(name)) return a;
  return std::nullopt;
}

bool Scope::is_constant_like(std::string_view name) const {
  auto a = function_arity(name);
  return a.has_value() && *a == 0;
}

namespace {
void collect_vars(TermId id, const Scope& scope, std::vector<SymId>& out) {
  const TermNode& n = term(id);
  if (n.args.empty()) {
    if (!scope.is_constant_like(symbol_name(n.head)) &&
        std::find(out.begin(), out.end(), n.head) == out.end())
      out.push_back(n.head);
    return;
  }
  for (TermId a : n.args) collect_vars(a, scope, out);
}
}  // namespace

std::vector<SymId> term_vars(TermId id, const Scope& scope) {
  std::vector<SymId> out;
  collect_vars(id, scope, out);
  return out;
}

bool is_ground(TermId id, const Scope& scope) {
  const TermNode& n = term(id);
  if (n.args.empty()) return scope.is_constant_like(symbol_name(n.head));
  for (TermId a : n.args)
    if (!is_ground(a, scope)) return false;
  return true;
}

std::string subscript(int n) {
  static const char* kDigits[10] = {"₀", "₁", "₂", "₃", "₄",
                                    "₅", "₆", "₇", "₈", "₉"};
  std::string digits = std::to_string(n);
  std::string out;
  for (char c : digits) out += kDigits[c - '0'];
  return out;
}

}  // namespace herbrand
