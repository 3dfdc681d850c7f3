#include "herbrand/parser.hpp"

#include <map>

namespace herbrand {

namespace {

enum class Tok : std::uint8_t {
  Name, LParen, RParen, Comma, Dot, Plus, Star, Eq, Le, Tilde, Amp, Bar,
  Arrow, DArrow, Forall, Exists, End,
};

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t pos;
};

bool ident_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c >= 0x80;
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = text[i];
    if (std::isspace(c)) { ++i; continue; }
    std::size_t start = i;
    auto push = [&](Tok kind, std::size_t len) {
      out.push_back({kind, text.substr(start, len), start});
      i += len;
    };
    switch (c) {
      case '(': push(Tok::LParen, 1); continue;
      case ')': push(Tok::RParen, 1); continue;
      case ',': push(Tok::Comma, 1); continue;
      case '.': push(Tok::Dot, 1); continue;
      case '+': push(Tok::Plus, 1); continue;
      case '*': push(Tok::Star, 1); continue;
      case '=': push(Tok::Eq, 1); continue;
      case '~': push(Tok::Tilde, 1); continue;
      case '&': push(Tok::Amp, 1); continue;
      case '|': push(Tok::Bar, 1); continue;
      case '<':
        if (text.substr(i, 2) == "<=") { push(Tok::Le, 2); continue; }
        if (text.substr(i, 3) == "<->") { push(Tok::DArrow, 3); continue; }
        throw ParseError("expected '<=' or '<->'", i);
      case '-':
        if (text.substr(i, 2) == "->") { push(Tok::Arrow, 2); continue; }
        throw ParseError("expected '->'", i);
      default: break;
    }
    if (ident_char(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      std::string_view name = text.substr(i, j - i);
      Tok kind = name == "forall" ? Tok::Forall
               : name == "exists" ? Tok::Exists
                                  : Tok::Name;
      out.push_back({kind, name, i});
      i = j;
      continue;
    }
    throw ParseError("unexpected character", i);
  }
  out.push_back({Tok::End, {}, text.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const Scope& scope)
      : tokens_(lex(text)), scope_(scope) {}

  Formula formula() {
    Formula f = parse_iff();
    expect(Tok::End, "trailing input after formula");
    return f;
  }

  TermId term() {
    TermId t = parse_sum();
    expect(Tok::End, "trailing input after term");
    return t;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t at_ = 0;
  const Scope& scope_;
  std::map<std::string, int, std::less<>> arity_;  // arities seen this parse

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = at_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  Token take() { return tokens_[at_ < tokens_.size() - 1 ? at_++ : at_]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    take();
    return true;
  }
  void expect(Tok kind, const char* what) {
    if (!accept(kind)) throw ParseError(what, peek().pos);
  }

  void check_arity(std::string_view name, int arity, std::size_t pos) {
    if (auto declared = scope_.function_arity(name)) {
      if (*declared != arity)
        throw ParseError("symbol '" + std::string(name) + "' declared with " +
                             std::to_string(*declared) + " arguments, used with " +
                             std::to_string(arity),
                         pos);
      return;
    }
    auto [it, inserted] = arity_.emplace(std::string(name), arity);
    if (!inserted && it->second != arity)
      throw ParseError("symbol '" + std::string(name) +
                           "' used with inconsistent arity",
                       pos);
  }

  // ── Terms ──────────────────────────────────────────────────────────────

  TermId parse_sum() {
    TermId t = parse_product();
    while (accept(Tok::Plus)) t = make_term("+", {t, parse_product()});
    return t;
  }

  TermId parse_product() {
    TermId t = parse_term_primary();
    while (accept(Tok::Star)) t = make_term("*", {t, parse_term_primary()});
    return t;
  }

  TermId parse_term_primary() {
    if (accept(Tok::LParen)) {
      TermId t = parse_sum();
      expect(Tok::RParen, "expected ')' in term");
      return t;
    }
    if (peek().kind != Tok::Name)
      throw ParseError("expected a term", peek().pos);
    Token name = take();
    if (!accept(Tok::LParen)) {
      check_arity(name.text, 0, name.pos);
      return make_term(name.text);
    }
    std::vector<TermId> args;
    if (!accept(Tok::RParen)) {
      args.push_back(parse_sum());
      while (accept(Tok::Comma)) args.push_back(parse_sum());
      expect(Tok::RParen, "expected ')' after arguments");
    }
    check_arity(name.text, static_cast<int>(args.size()), name.pos);
    return make_term(name.text, std::move(args));
  }

  // ── Formulas ───────────────────────────────────────────────────────────

  Formula parse_iff() {
    Formula f = parse_implies();
    if (accept(Tok::DArrow)) return iff(f, parse_iff());
    return f;
  }

  Formula parse_implies() {
    Formula f = parse_or();
    if (accept(Tok::Arrow)) return implies(f, parse_implies());
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (accept(Tok::Bar)) f = disj(f, parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (accept(Tok::Amp)) f = conj(f, parse_unary());
    return f;
  }

  Formula parse_unary() {
    if (accept(Tok::Tilde)) return neg(parse_unary());
    if (peek().kind == Tok::Forall || peek().kind == Tok::Exists) {
      bool universal = take().kind == Tok::Forall;
      if (peek().kind != Tok::Name)
        throw ParseError("expected a variable after quantifier", peek().pos);
      Token var = take();
      check_arity(var.text, 0, var.pos);
      if (scope_.is_constant_like(var.text))
        throw ParseError("cannot quantify over constant '" +
                             std::string(var.text) + "'",
                         var.pos);
      expect(Tok::Dot, "expected '.' after quantified variable");
      Formula body = parse_iff();
      SymId v = intern_symbol(var.text);
      return universal ? forall(v, body) : exists(v, body);
    }
    if (peek().kind == Tok::LParen && !paren_group_starts_atom())
      {
        take();
        Formula f = parse_iff();
        expect(Tok::RParen, "expected ')'");
        return f;
      }
    return parse_atom();
  }

  // A '(' can open either a parenthesized formula or a parenthesized term
  // that begins an atom; look at the token after the matching ')'.
  bool paren_group_starts_atom() const {
    int depth = 0;
    std::size_t i = at_;
    for (; i < tokens_.size(); ++i) {
      if (tokens_[i].kind == Tok::LParen) ++depth;
      else if (tokens_[i].kind == Tok::RParen && --depth == 0) break;
    }
    if (i + 1 >= tokens_.size()) return false;
    Tok next = tokens_[i + 1].kind;
    return next == Tok::Eq || next == Tok::Le || next == Tok::Plus ||
           next == Tok::Star;
  }

  Formula parse_atom() {
    TermId lhs = parse_sum();
    bool le = false;
    if (accept(Tok::Le)) le = true;
    else expect(Tok::Eq, "expected '=' or '<=' in atom");
    TermId rhs = parse_sum();
    return atom(le ? "<=" : "=", {lhs, rhs});
  }
};

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
    line.remove_suffix(1);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front())))
    line.remove_prefix(1);
  return line;
}

template <typename T, typename Fn>
std::vector<T> parse_lines(std::string_view text, Fn parse_one) {
  std::vector<T> out;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    auto eol = text.find('\n', offset);
    std::string_view line = text.substr(
        offset, eol == std::string_view::npos ? text.size() - offset
                                              : eol - offset);
    std::string_view body = strip_comment(line);
    if (!body.empty()) {
      try {
        out.push_back(parse_one(body));
      } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()), offset + e.pos());
      }
    }
    if (eol == std::string_view::npos) break;
    offset = eol + 1;
  }
  return out;
}

}  // namespace

Formula parse_formula(std::string_view text, const Scope& scope) {
  return Parser(text, scope).formula();
}

TermId parse_term(std::string_view text, const Scope& scope) {
  return Parser(text, scope).term();
}

std::vector<TermId> parse_term_lines(std::string_view text,
                                     const Scope& scope) {
  return parse_lines<TermId>(
      text, [&](std::string_view line) { return parse_term(line, scope); });
}

std::vector<Formula> parse_formula_lines(std::string_view text,
                                         const Scope& scope) {
  return parse_lines<Formula>(
      text, [&](std::string_view line) { return parse_formula(line, scope); });
}

}  // namespace herbrand
