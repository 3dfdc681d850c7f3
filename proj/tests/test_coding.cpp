// Gödel codes: byte-level pinning, structural ordering, injectivity over a
// large corpus, and the measured size bounds.
#include <doctest.h>

#include <algorithm>
#include <random>
#include <unordered_set>
#include <vector>

#include "herbrand/coding.hpp"
#include "herbrand/parser.hpp"

using namespace herbrand;

namespace {

Scope arith_scope() {
  static Signature sig = Signature::arithmetic();
  return Scope{&sig, nullptr};
}

// Random ground terms over the arithmetic functions, depth-bounded.
TermId random_term(std::mt19937_64& rng, int depth) {
  if (depth == 0) return make_term("0");
  switch (rng() % 4) {
    case 0: return make_term("0");
    case 1: return make_term("S", {random_term(rng, depth - 1)});
    case 2:
      return make_term("+", {random_term(rng, depth - 1),
                             random_term(rng, depth - 1)});
    default:
      return make_term("*", {random_term(rng, depth - 1),
                             random_term(rng, depth - 1)});
  }
}

}  // namespace

TEST_CASE("the zero symbol's code, byte for byte") {
  GodelCode zero = code_symbol("0");
  CHECK(zero.kind == CodeKind::Symbol);
  CHECK(zero.value == 16843056);
  CHECK(code_bytes(zero) == std::vector<std::uint8_t>{1, 1, 48});
  // Terms wrap the symbol record under their own tag.
  GodelCode t = code_term(make_term("0"));
  CHECK(t.kind == CodeKind::Term);
  CHECK(code_bytes(t) == std::vector<std::uint8_t>{2, 3, 1, 1, 48});
  CHECK(bit_length(t.value) == 41);
}

TEST_CASE("codes order by byte length first, then lexicographically") {
  CHECK(code_symbol("0").value < code_symbol("S").value);
  CHECK(code_symbol("S").value < code_symbol("𝔠").value);  // longer spelling
  Scope scope = arith_scope();
  TermId small = parse_term("S(0)", scope);
  TermId large = parse_term("S(S(0))", scope);
  CHECK(code_term(small).value < code_term(large).value);
}

TEST_CASE("pairs are ordered, sets are not") {
  GodelCode a = code_symbol("a");
  GodelCode b = code_symbol("b");
  CHECK(code_pair(a, b).value != code_pair(b, a).value);
  CHECK(code_set({a, b}).value == code_set({b, a}).value);
  CHECK(code_set({a, b}).value == code_set({b, a, b}).value);
  CHECK(code_set({a}).value != code_set({b}).value);
}

TEST_CASE("term-set codes agree with elementwise set codes") {
  Scope scope = arith_scope();
  TermSet lam;
  lam.insert(parse_term("S(0)", scope));
  lam.insert(parse_term("0", scope));
  std::vector<GodelCode> codes;
  for (TermId t : lam.members()) codes.push_back(code_term(t));
  CHECK(code_term_set(lam).value == code_set(codes).value);
  CHECK(code_term_set(lam).kind == CodeKind::Set);
}

TEST_CASE("no collisions across a hundred-thousand-object corpus") {
  std::mt19937_64 rng(7);
  std::unordered_set<TermId> seen;
  std::vector<TermId> terms;
  while (terms.size() < 100000) {
    TermId t = random_term(rng, 6);
    if (seen.insert(t).second) terms.push_back(t);
  }
  std::unordered_set<std::string> codes;
  codes.reserve(terms.size());
  for (TermId t : terms)
    CHECK(codes.insert(code_term(t).value.get_str(16)).second);

  // A sprinkle of formulas shares the space without clashing either.
  for (std::size_t i = 0; i + 1 < 2000; i += 2) {
    Formula f = atom("=", {terms[i], terms[i + 1]});
    CHECK(codes.insert(code_formula(f).value.get_str(16)).second);
  }
}

TEST_CASE("set cardinality is bounded by the code's bit length") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 1000; ++round) {
    TermSet set;
    std::size_t size = 1 + rng() % 40;
    for (std::size_t i = 0; i < size; ++i) set.insert(random_term(rng, 4));
    GodelCode code = code_term_set(set);
    CHECK(BigNat(set.size()) <= BigNat(bit_length(code.value)));
  }
}

TEST_CASE("union constant stays small on random samples") {
  std::mt19937_64 rng(13);
  BigNat worst = 0;
  for (int round = 0; round < 50; ++round) {
    std::vector<GodelCode> a, b;
    for (std::size_t i = 0; i < 1 + rng() % 6; ++i)
      a.push_back(code_term(random_term(rng, 3)));
    for (std::size_t i = 0; i < 1 + rng() % 6; ++i)
      b.push_back(code_term(random_term(rng, 3)));
    BigNat c = union_constant(a, b);
    CHECK(c >= 1);
    worst = std::max(worst, c);

    // The returned constant really is the least one for the sample.
    std::vector<GodelCode> both = a;
    both.insert(both.end(), b.begin(), b.end());
    BigNat u = code_set(both).value;
    CHECK(u <= c * code_set(a).value * code_set(b).value);
    if (c > 1) CHECK(u > (c - 1) * code_set(a).value * code_set(b).value);
  }
  CHECK(worst <= 64);
}

TEST_CASE("polynomial fits report the least covering exponent") {
  PBoundCheck two = fit_p_bound({{BigNat(2), BigNat(5)}, {BigNat(3), BigNat(9)}});
  CHECK(two.holds);
  CHECK(two.exponent == 2);
  PBoundCheck one = fit_p_bound({{BigNat(10), BigNat(11)}});
  CHECK(one.exponent == 1);
  PBoundCheck none = fit_p_bound({{BigNat(1), BigNat(9)}}, 3);
  CHECK(!none.holds);
}

TEST_CASE("universe and cartesian-power codes fit small polynomials") {
  Scope scope = arith_scope();
  TermSet lam;
  lam.insert(parse_term("0", scope));
  lam.insert(parse_term("S(0)", scope));
  for (int n = 0; n <= 2; ++n) {
    PBoundCheck r = check_universe_code_bound(lam, n);
    CHECK(r.holds);
    CHECK(r.exponent >= 1);
    CHECK(r.samples.size() == static_cast<std::size_t>(n) + 1);
  }
  CHECK_THROWS_AS(check_universe_code_bound(lam, 4), std::invalid_argument);
  TermSet tiny;
  tiny.insert(parse_term("0", scope));
  CHECK_THROWS_AS(check_universe_code_bound(tiny, 1), std::invalid_argument);

  std::vector<GodelCode> codes = {code_term(parse_term("0", scope)),
                                  code_term(parse_term("S(0)", scope))};
  for (int m = 1; m <= 3; ++m) {
    PBoundCheck r = cartesian_power_bound(codes, m);
    CHECK(r.holds);
  }
  CHECK_THROWS_AS(cartesian_power_bound(codes, 0), std::invalid_argument);
  CHECK_THROWS_AS(cartesian_power_bound({}, 1), std::invalid_argument);
}
