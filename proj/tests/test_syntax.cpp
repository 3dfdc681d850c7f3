// Terms, signatures, formulas, and the concrete syntax round trip.
#include <doctest.h>

#include <string>
#include <vector>

#include "herbrand/formula.hpp"
#include "herbrand/parser.hpp"
#include "herbrand/signature.hpp"
#include "herbrand/term.hpp"

using namespace herbrand;

TEST_CASE("terms intern to stable ids") {
  TermId zero = make_term("0");
  CHECK(zero == make_term("0"));
  TermId s0 = make_term("S", {zero});
  CHECK(s0 == make_term("S", {make_term("0")}));
  CHECK(s0 != zero);
  CHECK(term_head(s0) == "S");
  CHECK(term(s0).args == std::vector<TermId>{zero});
}

TEST_CASE("subterms are deduplicated in first-occurrence order") {
  // (0 + 0) * S(0): the shared 0 appears once, at its first position.
  TermId zero = make_term("0");
  TermId sum = make_term("+", {zero, zero});
  TermId prod = make_term("*", {sum, make_term("S", {zero})});
  std::vector<TermId> subs = subterms(prod);
  REQUIRE(subs.size() == 4);
  CHECK(subs[0] == prod);
  CHECK(subs[1] == sum);
  CHECK(subs[2] == zero);
  CHECK(term_head(subs[3]) == "S");
}

TEST_CASE("replace_at rewrites one occurrence") {
  TermId zero = make_term("0");
  TermId one = make_term("S", {zero});
  TermId sum = make_term("+", {zero, zero});
  // Positions are DFS: root, left, right.
  auto pos = positions(sum);
  REQUIRE(pos.size() == 3);
  TermId left = replace_at(sum, pos[1].first, one);
  CHECK(to_string(left) == "(S(0) + 0)");
  CHECK(replace_at(sum, pos[2].first, one) != left);
}

TEST_CASE("substitute maps leaf heads simultaneously") {
  TermId x = make_term("x");
  TermId y = make_term("y");
  TermId t = make_term("+", {x, make_term("S", {y})});
  TermId r = substitute(t, {{term(x).head, y}, {term(y).head, x}});
  CHECK(to_string(r) == "(y + S(x))");
}

TEST_CASE("scope separates variables from constants") {
  Signature sig = Signature::arithmetic();
  Scope scope{&sig, nullptr};
  CHECK(scope.is_constant_like("0"));
  CHECK(!scope.is_constant_like("x"));
  TermId t = make_term("+", {make_term("x"), make_term("0")});
  CHECK(!is_ground(t, scope));
  CHECK(term_vars(t, scope).size() == 1);
  CHECK(is_ground(make_term("0"), scope));
}

TEST_CASE("subscript spelling") {
  CHECK(subscript(0) == "₀");
  CHECK(subscript(1) == "₁");
  CHECK(subscript(12) == "₁₂");
}

TEST_CASE("negation folds on atoms") {
  TermId zero = make_term("0");
  Formula a = atom("=", {zero, zero});
  CHECK(neg(a).kind() == FormulaKind::NegAtom);
  CHECK(neg(neg(a)).kind() == FormulaKind::Atom);
  // Composite negations stay as Not nodes.
  CHECK(neg(conj(a, a)).kind() == FormulaKind::Not);
}

TEST_CASE("parser round trip on representative sentences") {
  Signature sig = Signature::arithmetic();
  Scope scope{&sig, nullptr};
  for (const char* text : {
           "forall x. ~S(x) = 0",
           "forall x. forall y. S(x) = S(y) -> x = y",
           "forall x. ~x = 0 -> (exists y. x = S(y))",
           "forall x. forall y. x <= y <-> (exists z. (z + x) = y)",
           "forall x. (x + 0) = x",
           "forall x. forall y. (x + S(y)) = S((x + y))",
           "forall x. (x * 0) = 0",
           "forall x. forall y. (x * S(y)) = ((x * y) + x)",
       }) {
    Formula f = parse_formula(text, scope);
    CHECK(to_string(f) == text);
    CHECK(is_sentence(f, scope));
  }
}

TEST_CASE("precedence and associativity") {
  Signature sig = Signature::arithmetic();
  Scope scope{&sig, nullptr};
  // & binds tighter than |, | than ->, -> than <->.
  Formula f = parse_formula("x = 0 & x = 0 | x = 0", scope);
  CHECK(f.kind() == FormulaKind::Or);
  CHECK(f.left().kind() == FormulaKind::And);
  // | is left-associative: a | b | c = (a | b) | c.
  Formula g = parse_formula("x = 0 | x <= 0 | 0 = x", scope);
  CHECK(g.kind() == FormulaKind::Or);
  CHECK(g.left().kind() == FormulaKind::Or);
  CHECK(g.right().kind() == FormulaKind::Atom);
  // -> is right-associative.
  Formula h = parse_formula("x = 0 -> x = 0 -> x = 0", scope);
  CHECK(h.kind() == FormulaKind::Implies);
  CHECK(h.right().kind() == FormulaKind::Implies);
  // Quantifier bodies are maximal.
  Formula q = parse_formula("forall x. x = 0 | x <= 0", scope);
  CHECK(q.kind() == FormulaKind::Forall);
  CHECK(q.body().kind() == FormulaKind::Or);
}

TEST_CASE("parser accepts multi-byte identifiers") {
  Signature sig = Signature::arithmetic();
  Scope scope{&sig, nullptr};
  TermId t = parse_term("𝔥(𝔠, 0) + S(𝔭(𝔠))", scope);
  CHECK(to_string(t) == "(𝔥(𝔠, 0) + S(𝔭(𝔠)))");
  CHECK(term_head(t) == "+");
}

TEST_CASE("parse errors carry byte positions") {
  Signature sig = Signature::arithmetic();
  Scope scope{&sig, nullptr};
  CHECK_THROWS_AS(parse_formula("forall x.", scope), ParseError);
  CHECK_THROWS_AS(parse_term("S(", scope), ParseError);
  CHECK_THROWS_AS(parse_formula("x = ", scope), ParseError);
  try {
    parse_formula("x = )", scope);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.pos() == 4);
  }
}

TEST_CASE("line readers skip blanks and comments") {
  Signature sig = Signature::arithmetic();
  Scope scope{&sig, nullptr};
  auto terms = parse_term_lines("# heading\n0\n\nS(0)\n", scope);
  REQUIRE(terms.size() == 2);
  CHECK(to_string(terms[1]) == "S(0)");
  auto formulas = parse_formula_lines("0 = 0\n# trailing\n", scope);
  REQUIRE(formulas.size() == 1);
}

TEST_CASE("alpha equality ignores bound names only") {
  Signature sig = Signature::arithmetic();
  Scope scope{&sig, nullptr};
  Formula f = parse_formula("forall x. x = y", scope);
  Formula g = parse_formula("forall z. z = y", scope);
  Formula h = parse_formula("forall z. z = w", scope);
  CHECK(alpha_equal(f, g));
  CHECK(!alpha_equal(f, h));
  CHECK(!structural_equal(f, g));
  // variant equality additionally renames free variables bijectively,
  // but never constants.
  CHECK(variant_equal(f, h, scope));
  Formula c = parse_formula("forall x. x = 0", scope);
  CHECK(!variant_equal(f, c, scope));
}

TEST_CASE("free variables in first-occurrence order") {
  Signature sig = Signature::arithmetic();
  Scope scope{&sig, nullptr};
  Formula f = parse_formula("y = x & (forall y. y <= x & y <= w)", scope);
  std::vector<SymId> fv = free_vars(f, scope);
  REQUIRE(fv.size() == 3);
  CHECK(symbol_name(fv[0]) == "y");
  CHECK(symbol_name(fv[1]) == "x");
  CHECK(symbol_name(fv[2]) == "w");
}

TEST_CASE("substitute_free respects binders") {
  Signature sig = Signature::arithmetic();
  Scope scope{&sig, nullptr};
  Formula f = parse_formula("x = 0 & (forall x. x = 0)", scope);
  Formula g = substitute_free(f, intern_symbol("x"), make_term("0"));
  CHECK(to_string(g) == "0 = 0 & (forall x. x = 0)");
}
