// ═══════════════════════════════════════════════════════════════════════════
// parser.hpp — concrete syntax for terms and formulas
//
//   terms     0 | S(t) | (t + t) | (t * t) | name | name(t, ..., t)
//   atoms     t = t | t <= t
//   formulas  ~F | F & F | F | F | F -> F | F <-> F | forall x. F |
//             exists x. F
//
// Precedence: ~ > & > | > -> > <->; & and | associate left, -> and <->
// right; quantifier bodies extend as far right as possible; parentheses may
// be used freely.  Inside terms, * binds tighter than + and both associate
// left (the printer always emits the fully parenthesized form).
//
// Identifiers are runs of [A-Za-z0-9_] or non-ASCII (UTF-8) bytes, so names
// such as 𝔠, 𝔭, 𝔥, 𝔮 or 𝔣₀ parse as ordinary symbols.  Symbol arities are
// checked against the scope and must be consistent within one parse.
// ═══════════════════════════════════════════════════════════════════════════
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "herbrand/formula.hpp"
#include "herbrand/signature.hpp"

namespace herbrand {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t pos)
      : std::runtime_error(message), pos_(pos) {}
  std::size_t pos() const { return pos_; }

 private:
  std::size_t pos_;
};

Formula parse_formula(std::string_view text, const Scope& scope);
TermId parse_term(std::string_view text, const Scope& scope);

/// Parses a term-per-line file (blank lines and '#' comments ignored).
std::vector<TermId> parse_term_lines(std::string_view text,
                                     const Scope& scope);

/// Parses a formula-per-line file (blank lines and '#' comments ignored).
std::vector<Formula> parse_formula_lines(std::string_view text,
                                         const Scope& scope);

}  // namespace herbrand
