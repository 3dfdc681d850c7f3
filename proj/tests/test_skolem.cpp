// Skolem symbols, the registry, non-prenex Skolemization, and instances.
#include <doctest.h>

#include <string>
#include <vector>

#include "herbrand/parser.hpp"
#include "herbrand/skolem.hpp"
#include "herbrand/termset.hpp"

using namespace herbrand;

namespace {

struct Ctx {
  Signature sig = Signature::arithmetic();
  SkolemRegistry reg;
  Scope scope{&sig, &reg};

  Formula fml(const char* text) { return parse_formula(text, scope); }
  TermId trm(const char* text) { return parse_term(text, scope); }
};

}  // namespace

TEST_CASE("canonical form identifies variants") {
  Ctx c;
  CHECK(canonical_form(c.fml("exists y. x = S(y)"), c.scope) ==
        canonical_form(c.fml("exists w. v = S(w)"), c.scope));
  CHECK(canonical_form(c.fml("exists y. x = S(y)"), c.scope) !=
        canonical_form(c.fml("exists y. y = S(x)"), c.scope));
}

TEST_CASE("registry reuses one symbol per class and pins names") {
  Ctx c;
  c.reg.pin(c.fml("exists y. x = S(y)"), "𝔭", c.scope);
  // Pinning the same class to the same name is idempotent...
  c.reg.pin(c.fml("exists w. v = S(w)"), "𝔭", c.scope);
  // ...but to a different name is an error, as is reusing a taken name.
  CHECK_THROWS_AS(c.reg.pin(c.fml("exists y. x = S(y)"), "𝔪", c.scope),
                  std::logic_error);
  CHECK_THROWS_AS(c.reg.pin(c.fml("exists z. (z + x) = y"), "𝔭", c.scope),
                  std::logic_error);

  const SkolemSymbol& p = c.reg.symbol_for(c.fml("exists u. w = S(u)"), c.scope);
  CHECK(p.name == "𝔭");
  CHECK(p.arity == 1);

  // Unpinned classes get fresh 𝔣-names; arity = number of free variables.
  const SkolemSymbol& f0 =
      c.reg.symbol_for(c.fml("exists z. (z + x) = y"), c.scope);
  CHECK(f0.name == "𝔣₀");
  CHECK(f0.arity == 2);
  CHECK(c.reg.symbols().size() == 2);
  CHECK(c.reg.find("𝔭") != nullptr);
  CHECK(c.reg.arity_of("𝔣₀") == 2);
}

TEST_CASE("goal naming produces fresh constants and skips collisions") {
  Ctx c;
  c.reg.set_goal_naming(true);
  const SkolemSymbol& c1 = c.reg.symbol_for(c.fml("exists x. ~x = 0"), c.scope);
  CHECK(c1.name == "𝔠");
  const SkolemSymbol& c2 =
      c.reg.symbol_for(c.fml("exists x. ~x <= 0"), c.scope);
  CHECK(c2.name == "𝔠₂");
}

TEST_CASE("skolemization of the predecessor axiom") {
  Ctx c;
  c.reg.pin(c.fml("exists y. x = S(y)"), "𝔭", c.scope);
  Skolemization sk = skolemize(
      c.fml("forall x. ~x = 0 -> (exists y. x = S(y))"), c.reg, c.sig);
  CHECK(to_string(sk.rnnf) == "forall x. x = 0 | (exists y. x = S(y))");
  CHECK(to_string(sk.matrix) == "x = 0 | x = S(𝔭(x))");
  REQUIRE(sk.universals.size() == 1);
  CHECK(symbol_name(sk.universals[0]) == "x");
}

TEST_CASE("skolemization keeps universals and the witness arguments") {
  Ctx c;
  c.reg.pin(c.fml("exists z. (z + x) = y"), "𝔥", c.scope);
  Skolemization sk = skolemize(
      c.fml("forall x. forall y. x <= y <-> (exists z. (z + x) = y)"), c.reg,
      c.sig);
  CHECK(to_string(sk.with_foralls) ==
        "forall x. forall y. (~x <= y | (𝔥(x, y) + x) = y) & "
        "((forall z₁. ~(z₁ + x) = y) | x <= y)");
  CHECK(to_string(sk.matrix) ==
        "(~x <= y | (𝔥(x, y) + x) = y) & (~(z₁ + x) = y | x <= y)");
  CHECK(sk.universals.size() == 3);
}

TEST_CASE("inner existentials are keyed before outer substitution") {
  Ctx c;
  c.reg.pin(c.fml("exists y. (y <= (x * x) & y = (x * x))"), "𝔮", c.scope);
  // The nested witness depends on the existential's own free variable, so
  // the outer constant is substituted into the 𝔮-application afterwards.
  c.reg.set_goal_naming(true);
  Skolemization sk = skolemize(
      c.fml("exists x. exists y. (y <= (x * x) & y = (x * x))"), c.reg, c.sig);
  c.reg.set_goal_naming(false);
  CHECK(to_string(sk.matrix) == "𝔮(𝔠) <= (𝔠 * 𝔠) & 𝔮(𝔠) = (𝔠 * 𝔠)");
}

TEST_CASE("skolemization leaves quantifier-free formulas alone") {
  Ctx c;
  Skolemization sk = skolemize(c.fml("x = 0 | ~x <= y"), c.reg, c.sig);
  CHECK(to_string(sk.matrix) == "x = 0 | ~x <= y");
  CHECK(c.reg.symbols().empty());
}

TEST_CASE("atom sides are the maximal terms") {
  Ctx c;
  std::vector<TermId> sides;
  collect_atom_sides(c.fml("(x + S(y)) = S((x + y)) & 0 <= x"), sides);
  REQUIRE(sides.size() == 4);
  CHECK(to_string(sides[0]) == "(x + S(y))");
  CHECK(to_string(sides[1]) == "S((x + y))");
  CHECK(to_string(sides[2]) == "0");
  CHECK(to_string(sides[3]) == "x");

  TermSet lam;
  lam.insert(c.trm("0"));
  lam.insert(c.trm("S(0)"));
  CHECK(atom_sides_in(c.fml("0 = S(0)"), lam));
  CHECK(!atom_sides_in(c.fml("0 = S(S(0))"), lam));
}

TEST_CASE("instances draw substitution values from the subterm closure") {
  Ctx c;
  // Λ's members contain 0 and S(0) only as proper subterms; the instance at
  // x:=0, y:=0 is available because its atom sides are members, even though
  // the substituted values are not.
  TermSet lam;
  lam.insert(c.trm("0 + S(0)"));
  lam.insert(c.trm("S(0 + 0)"));
  Formula a6 = c.fml("forall x. forall y. (x + S(y)) = S((x + y))");
  std::vector<SkolemInstance> inst =
      available_instances(a6, lam, c.reg, c.sig);
  REQUIRE(inst.size() == 1);
  CHECK(to_string(inst[0].ground) == "(0 + S(0)) = S((0 + 0))");
  REQUIRE(inst[0].subst.size() == 2);
  CHECK(to_string(inst[0].subst[0].second) == "0");
  CHECK(to_string(inst[0].subst[1].second) == "0");
}

TEST_CASE("whole instances must land inside the term set") {
  Ctx c;
  c.reg.pin(c.fml("exists z. (z + x) = y"), "𝔥", c.scope);
  Formula a4 =
      c.fml("forall x. forall y. x <= y <-> (exists z. (z + x) = y)");
  // Both atom blocks of the conjunction count: the 𝔥-side term must be a
  // member too, so a set without it admits no instance at all.
  TermSet small;
  small.insert(c.trm("0"));
  CHECK(available_instances(a4, small, c.reg, c.sig).empty());

  TermSet enough;
  for (const char* t : {"0", "𝔥(0, 0)", "𝔥(0, 0) + 0", "0 + 0"})
    enough.insert(c.trm(t));
  std::vector<SkolemInstance> inst =
      available_instances(a4, enough, c.reg, c.sig);
  REQUIRE(!inst.empty());
  CHECK(to_string(inst[0].ground) ==
        "(~0 <= 0 | (𝔥(0, 0) + 0) = 0) & (~(0 + 0) = 0 | 0 <= 0)");
}
