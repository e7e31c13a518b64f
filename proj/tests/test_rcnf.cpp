#include <catch2/catch_amalgamated.hpp>

#include "rescnf/brute_force.hpp"
#include "rescnf/horn.hpp"
#include "rescnf/rcnf.hpp"
#include "rescnf/serialize.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace rescnf;

namespace {
Clause C(std::initializer_list<int> lits) { return Clause::from_dimacs(lits); }
}  // namespace

TEST_CASE("rcnf_of contains the resolution clause of a pair", "[rcnf]") {
  // c_{ip} = (x1 v x2), c_{-iq} = (-x1 v x3)
  const Formula f({C({1, 2}), C({-1, 3})}, 3);
  const RcnfEncoding enc = rcnf_of(f);
  const Variable a = *enc.meta_variable_of.find(C({1, 2}));
  const Variable b = *enc.meta_variable_of.find(C({-1, 3}));
  const Variable pq = *enc.meta_variable_of.find(C({2, 3}));
  const auto& cs = enc.formula.clauses;
  CHECK(std::find(cs.begin(), cs.end(), Clause{Literal(a, true)}) != cs.end());
  CHECK(std::find(cs.begin(), cs.end(), Clause{Literal(b, true)}) != cs.end());
  CHECK(std::find(cs.begin(), cs.end(), Clause{Literal(a, false), Literal(b, false), Literal(pq, true)}) != cs.end());
  CHECK(is_horn(enc.formula));
}

TEST_CASE("rcnf_of on a unit contradiction", "[rcnf]") {
  const RcnfEncoding enc = rcnf_of(Formula({C({1}), C({-1})}, 1));
  CHECK(enc.formula.variable_count == 2);
  CHECK(enc.unit_assertions == std::vector<Clause>{C({1}), C({2})});
  CHECK(enc.resolution_clauses == std::vector<Clause>{C({-1, -2})});
  CHECK_FALSE(enc.meta_variable_of.find(Clause{}));
  CHECK(horn_sat(enc.formula).verdict == Verdict::Unsat);
  CHECK(unit_propagate(enc.formula).conflict);
}

TEST_CASE("rcnf_of with an empty input clause asserts falsum", "[rcnf]") {
  const RcnfEncoding enc = rcnf_of(Formula({C({1}), Clause{}}, 1));
  CHECK(horn_sat(enc.formula).verdict == Verdict::Unsat);
}

TEST_CASE("rcnf_of is equisatisfiable and Horn", "[rcnf][property]") {
  gen::Rng rng(51);
  int checked = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const Formula f = gen::random_formula(rng, {6, 12, 3});
    const RcnfEncoding enc = rcnf_of(f);
    REQUIRE(is_horn(enc.formula));
    REQUIRE_FALSE(enc.meta_variable_of.find(Clause{}));
    if (enc.truncated) continue;
    ++checked;
    REQUIRE((horn_sat(enc.formula).verdict == Verdict::Sat) == oracle::satisfiable(f));
  }
  CHECK(checked == 120);
}

TEST_CASE("rcnf_of marks truncated encodings", "[rcnf]") {
  const Formula f({C({1, 2}), C({-2, 3}), C({-3, 4}), C({-4, 5})}, 5);
  const RcnfEncoding enc = rcnf_of(f, Budget{5, 64});
  CHECK(enc.truncated);
  CHECK(is_horn(enc.formula));
}

TEST_CASE("split_horn3 chains wide clauses", "[rcnf][split]") {
  const Formula g({C({1, -2, -3, -4})}, 4);
  const Formula out = split_horn3(g);
  CHECK(out.variable_count == 6);
  CHECK(out.clauses == std::vector<Clause>{C({1, -2, -5}), C({5, -3, -6}), C({6, -4})});
}

TEST_CASE("split_horn3 gives goal clauses a negative head", "[rcnf][split]") {
  const Formula out = split_horn3(Formula({C({-1, -2, -3, -4, -5})}, 5));
  CHECK(out.clauses == std::vector<Clause>{C({-1, -2, -6}), C({6, -3, -7}), C({7, -4, -8}), C({8, -5})});
  CHECK(is_horn(out));
}

TEST_CASE("split_horn3 leaves narrow formulas unchanged", "[rcnf][split]") {
  const Formula g({C({1, -2, -3}), C({-1, -2}), C({3}), Clause{}}, 3);
  CHECK(split_horn3(g) == g);
  CHECK_THROWS_AS(split_horn3(Formula({C({1, 2})}, 2)), NotHornError);
}

TEST_CASE("split_horn3 preserves satisfiability", "[rcnf][split][property]") {
  gen::Rng rng(52);
  for (int trial = 0; trial < 200; ++trial) {
    const Formula g = gen::random_horn(rng, {8, 12, 6});
    const Formula out = split_horn3(g);
    REQUIRE(is_horn(out));
    std::uint32_t wide = 0;
    for (const Clause& c : g.clauses) wide += c.size() > 3 ? static_cast<std::uint32_t>(c.size() - 2) : 0;
    REQUIRE(out.variable_count == g.variable_count + wide);
    for (const Clause& c : out.clauses) REQUIRE(c.size() <= 3);
    REQUIRE(oracle::satisfiable(out) == oracle::satisfiable(g));
  }
}

TEST_CASE("gadget_rcnf templates", "[rcnf][gadget]") {
  SECTION("width 1") {
    const MetaFormula m = gadget_rcnf(C({5}));
    REQUIRE(m.formula.clauses.size() == 2);
    CHECK(m.table.clauses() == std::vector<Clause>{C({5}), C({-5})});
    CHECK(m.formula.clauses == std::vector<Clause>{C({1}), C({-1, -2})});
  }
  SECTION("width 2") {
    const MetaFormula m = gadget_rcnf(C({1, -2}));
    REQUIRE(m.formula.clauses.size() == 3);
    // x_{P-q}=1, x_P=2, x_q=3, x_{-P}=4
    CHECK(m.table.clauses() == std::vector<Clause>{C({1, -2}), C({1}), C({2}), C({-1})});
    CHECK(m.formula.clauses == std::vector<Clause>{C({1}), C({-1, 2, -3}), C({-2, -4})});
  }
  SECTION("width 3") {
    const MetaFormula m = gadget_rcnf(C({1, -2, -3}));
    REQUIRE(m.formula.clauses.size() == 6);
    // x_{I-j-k}=1, x_{I-k}=2, x_j=3, x_{I-j}=4, x_k=5, x_I=6, x_{-I}=7
    CHECK(m.table.clauses() ==
          std::vector<Clause>{C({1, -2, -3}), C({1, -3}), C({2}), C({1, -2}), C({3}), C({1}), C({-1})});
    CHECK(m.formula.clauses == std::vector<Clause>{C({1}), C({-1, 2, -3}), C({-1, -5, 4}), C({-4, -3, 6}),
                                                   C({-2, -5, 6}), C({-6, -7})});
  }
  SECTION("goal clause uses a negative head") {
    const MetaFormula m = gadget_rcnf(C({-1, -2}));
    CHECK(m.table.clauses() == std::vector<Clause>{C({-1, -2}), C({-1}), C({2}), C({1})});
  }
  SECTION("rejections") {
    CHECK_THROWS_AS(gadget_rcnf(C({1, 2})), NotHornError);
    CHECK_THROWS_AS(gadget_rcnf(C({1, -2, -3, -4})), Error);
    CHECK_THROWS_AS(gadget_rcnf(Clause{}), Error);
  }
}

TEST_CASE("gadget clause counts are 2, 3, 6 by width", "[rcnf][gadget][property]") {
  gen::Rng rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    const auto w = rng.between(1, 3);
    Clause c = gen::random_clause(rng, 6, w);
    if (classify(c) == ClauseKind::NonHorn) {
      std::vector<Literal> lits;
      for (Literal l : c) lits.emplace_back(l.var(), false);
      c = Clause(lits);
    }
    const std::size_t expected = w == 1 ? 2 : w == 2 ? 3 : 6;
    REQUIRE(gadget_rcnf(c).formula.clauses.size() == expected);
  }
}

TEST_CASE("horn_to_rcnf", "[rcnf]") {
  CHECK(horn_sat(horn_to_rcnf(Formula({C({1}), C({-1})}, 1)).formula).verdict == Verdict::Unsat);
  CHECK(horn_sat(horn_to_rcnf(Formula({C({-1, -2})}, 2)).formula).verdict == Verdict::Sat);
  CHECK(horn_sat(horn_to_rcnf(Formula({C({1}), Clause{}}, 1)).formula).verdict == Verdict::Unsat);
  CHECK_THROWS_AS(horn_to_rcnf(Formula({C({1, 2})}, 2)), NotHornError);
}

TEST_CASE("horn_to_rcnf shares meta variables across gadgets", "[rcnf]") {
  // Both gadgets mention the unit sub-clause (x1).
  const MetaFormula m = horn_to_rcnf(Formula({C({1}), C({2, -1})}, 2));
  const auto& t = m.table.clauses();
  CHECK(std::count(t.begin(), t.end(), C({1})) == 1);
  CHECK(m.formula.clauses.size() == 5);
}

TEST_CASE("horn_to_rcnf preserves satisfiability", "[rcnf][property]") {
  gen::Rng rng(54);
  int unsat = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Formula g = gen::random_horn(rng, {10, 20, 6});
    const MetaFormula m = horn_to_rcnf(g);
    REQUIRE(is_horn(m.formula));
    const bool sat = oracle::satisfiable(g);
    unsat += !sat;
    REQUIRE((horn_sat(m.formula).verdict == Verdict::Sat) == sat);
  }
  CHECK(unsat > 20);
}

TEST_CASE("meta sidecar JSON", "[rcnf][json]") {
  const MetaFormula m = gadget_rcnf(C({5}));
  CHECK(meta_sidecar(m.table).dump() == R"({"meta_vars":[{"id":1,"clause":[5]},{"id":2,"clause":[-5]}]})");
}
