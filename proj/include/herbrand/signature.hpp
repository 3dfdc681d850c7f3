// ═══════════════════════════════════════════════════════════════════════════
// signature.hpp — symbol declarations and the variable/constant distinction
//
// A Signature declares the constants, functions and predicates of the base
// language.  Variables are not declared: any 0-ary head that is neither a
// declared constant nor a registered Skolem symbol is a variable.  Code that
// needs the distinction takes a Scope, which bundles the signature with an
// optional extra arity source (the Skolem registry implements that
// interface, see skolem.hpp).
// ═══════════════════════════════════════════════════════════════════════════
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "herbrand/term.hpp"

namespace herbrand {

/// Extra function symbols layered on top of a signature (Skolem registry).
class SymbolArities {
 public:
  virtual ~SymbolArities() = default;
  virtual std::optional<int> arity_of(std::string_view name) const = 0;
};

class Signature {
 public:
  /// The arithmetic base language: constant 0; functions S/1, +/2, */2;
  /// predicates =/2, <=/2.
  static Signature arithmetic();

  void add_constant(std::string_view name);
  void add_function(std::string_view name, int arity);
  void add_predicate(std::string_view name, int arity);

  bool is_constant(std::string_view name) const;
  /// Arity of a declared function (constants report 0).
  std::optional<int> function_arity(std::string_view name) const;
  std::optional<int> predicate_arity(std::string_view name) const;

  /// Function symbols (constants included) in declaration order.
  const std::vector<std::pair<std::string, int>>& functions() const {
    return functions_;
  }
  const std::vector<std::pair<std::string, int>>& predicates() const {
    return predicates_;
  }

 private:
  std::vector<std::pair<std::string, int>> functions_;   // constants are /0
  std::vector<std::pair<std::string, int>> predicates_;
};

/// Subscript-digit spelling of n (0 → "₀", 12 → "₁₂"), for generated names.
std::string subscript(int n);

/// A signature plus an optional Skolem-symbol overlay.
struct Scope {
  const Signature* sig = nullptr;
  const SymbolArities* skolem = nullptr;

  /// Arity of `name` as a function symbol, if declared anywhere.
  std::optional<int> function_arity(std::string_view name) const;
  /// True when a 0-ary occurrence of `name` denotes a constant (declared or
  /// Skolem), i.e. is not a variable.
  bool is_constant_like(std::string_view name) const;
};

// ── Scope-dependent term queries ─────────────────────────────────────────────

/// Variable symbols of a term in first-occurrence order.
std::vector<SymId> term_vars(TermId id, const Scope& scope);

/// True when the term contains no variables.
bool is_ground(TermId id, const Scope& scope);

}  // namespace herbrand
