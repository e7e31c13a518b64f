#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "rescnf/brute_force.hpp"
#include "rescnf/ccnf.hpp"
#include "rescnf/resolution.hpp"
#include "rescnf/serialize.hpp"
#include "support/oracles.hpp"

using namespace rescnf;

namespace {
Clause C(std::initializer_list<int> lits) { return Clause::from_dimacs(lits); }
const GadgetRoles kRoles123{{Variable{1}, Variable{2}, Variable{3}}};
}  // namespace

TEST_CASE("s3cnf matches the simplex display", "[scnf]") {
  const Formula t = s3cnf(kRoles123);
  CHECK(t.clauses == std::vector<Clause>{C({-1, -2}), C({-2, -3}), C({-1, -3}), C({1, 2, 3})});
  CHECK(t.variable_count == 3);
}

TEST_CASE("s3cnf models are exactly the one-hot assignments", "[scnf]") {
  const auto ms = oracle::models(oracle::int_clauses(s3cnf(kRoles123)), 3);
  CHECK(ms == std::vector<std::uint64_t>{0b001, 0b010, 0b100});
}

TEST_CASE("s3cnf with a negative role substitutes the complement", "[scnf]") {
  const Formula t = s3cnf({{Variable{1}, Variable{2}, Variable{3}}, {false, true, true}});
  CHECK(t.clauses == std::vector<Clause>{C({1, -2}), C({-2, -3}), C({1, -3}), C({-1, 2, 3})});
}

TEST_CASE("s4cnf matches the simplex display", "[scnf]") {
  const Formula t = s4cnf(kRoles123);
  CHECK(t.clauses == std::vector<Clause>{C({-1, -2, 3}), C({1, -2, -3}), C({-1, 2, -3}), C({1, 2, 3})});
  // Satisfied exactly by the even-parity-complement assignments with an odd
  // number of true variables: 100, 010, 001, 111.
  const auto ms = oracle::models(oracle::int_clauses(t), 3);
  CHECK(ms == std::vector<std::uint64_t>{0b001, 0b010, 0b100, 0b111});
  CHECK(brute_force_sat(t).verdict == Verdict::Sat);
}

TEST_CASE("clauses inside one simplex gadget never resolve", "[scnf]") {
  for (const Formula& t : {s3cnf(kRoles123), s4cnf(kRoles123)}) {
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) {
        const auto all = oracle::all_resolvents(oracle::int_clauses(t)[i], oracle::int_clauses(t)[j]);
        CHECK(joint_variables(t.clauses[i], t.clauses[j]).size() == all.size());
        CHECK_FALSE(resolve(t.clauses[i], t.clauses[j]));
      }
  }
  // S4: every pair shares exactly two joint variables.
  const Formula t = s4cnf(kRoles123);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) CHECK(joint_variables(t.clauses[i], t.clauses[j]).size() == 2);
}

TEST_CASE("gadget shapes", "[scnf]") {
  for (bool p : {true, false})
    for (bool q : {true, false}) {
      const GadgetRoles roles{{Variable{4}, Variable{7}, Variable{9}}, {p, q, !p}};
      const Formula t3 = s3cnf(roles);
      const Formula t4 = s4cnf(roles);
      REQUIRE(t3.clauses.size() == 4);
      REQUIRE(t4.clauses.size() == 4);
      CHECK(std::count_if(t3.clauses.begin(), t3.clauses.end(), [](const Clause& c) { return c.size() == 2; }) == 3);
      CHECK(std::all_of(t4.clauses.begin(), t4.clauses.end(), [](const Clause& c) { return c.size() == 3; }));
    }
  CHECK_THROWS_AS(s3cnf({{Variable{1}, Variable{1}, Variable{2}}}), Error);
  CHECK_THROWS_AS(s4cnf({{Variable{1}, Variable{2}, Variable{2}}}), Error);
}

TEST_CASE("named graphs", "[graph]") {
  struct Expect {
    CubicGraph g;
    std::size_t nodes, edges, girth;
  };
  for (const Expect& e : {Expect{graphs::k4(), 4, 6, 3}, Expect{graphs::petersen(), 10, 15, 5},
                          Expect{graphs::heawood(), 14, 21, 6}, Expect{graphs::mcgee(), 24, 36, 7}}) {
    INFO(e.g.name());
    CHECK(e.g.node_count() == e.nodes);
    CHECK(e.g.edge_count() == e.edges);
    CHECK(e.g.is_cubic());
    CHECK(e.g.connected());
    CHECK(girth(e.g) == e.girth);
    CHECK(oracle::girth_by_edge_removal(e.g.node_count(), e.g.edges()) == e.girth);
  }
  CHECK_FALSE(graphs::by_name("tutte"));
}

TEST_CASE("girth of an acyclic graph", "[graph]") {
  const CubicGraph path("path", 3, {{0, 1}, {1, 2}});
  CHECK_FALSE(girth(path));
  CHECK_FALSE(path.is_cubic());
}

TEST_CASE("cycles_of_length enumerates each cycle once", "[graph]") {
  CHECK(cycles_of_length(graphs::k4(), 3).size() == 4);
  CHECK(cycles_of_length(graphs::k4(), 4).size() == 3);
  CHECK(cycles_of_length(graphs::petersen(), 5).size() == 12);
  CHECK(cycles_of_length(graphs::petersen(), 4).empty());
}

TEST_CASE("random cubic graphs", "[graph]") {
  const graphs::RandomCubicSpec spec{14, 5, 7};
  const CubicGraph a = graphs::random_cubic(spec);
  const CubicGraph b = graphs::random_cubic(spec);
  CHECK(a.edges() == b.edges());
  CHECK(a.is_cubic());
  CHECK(a.connected());
  CHECK(*girth(a) >= 5);
  CHECK(oracle::girth_by_edge_removal(a.node_count(), a.edges()) == girth(a));

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const CubicGraph g = graphs::random_cubic({20, 4, seed});
    CHECK(g.is_cubic());
    CHECK(*girth(g) >= 4);
  }
  CHECK_THROWS_AS(graphs::random_cubic({7, 3, 1}), GraphError);
  CHECK_THROWS_AS(graphs::random_cubic({2, 3, 1}), GraphError);
  // The smallest cubic graph of girth 6 has 14 nodes.
  CHECK_THROWS_AS(graphs::random_cubic({10, 6, 1, 200}), GraphError);
}

TEST_CASE("assemble_ccnf", "[ccnf]") {
  const CubicGraph p = graphs::petersen();
  const Formula f = assemble_ccnf(p, CcnfSpec::uniform(p, 2, Rational(2), GadgetKind::S4));
  CHECK(f.clauses.size() == 40);
  CHECK(f.variable_count == 15);

  const CubicGraph k = graphs::k4();
  const Formula g = assemble_ccnf(k, CcnfSpec::uniform(k, 1, Rational(2), GadgetKind::S3));
  CHECK(g.clauses.size() == 16);
  CHECK(g.variable_count == 6);
  // Node 0 of K4 touches edges {0,1}, {0,2}, {0,3}: variables 1, 2, 3.
  CHECK(std::vector<Clause>(g.clauses.begin(), g.clauses.begin() + 4) ==
        std::vector<Clause>{C({-1, -2}), C({-2, -3}), C({-1, -3}), C({1, 2, 3})});
}

TEST_CASE("every CCNF variable lives in exactly two gadgets", "[ccnf][property]") {
  for (const CubicGraph& g : {graphs::k4(), graphs::petersen(), graphs::mcgee()}) {
    const unsigned k = static_cast<unsigned>((*girth(g) - 1) / 2);
    const GadgetGraph gg = build_gadget_graph(g, CcnfSpec::uniform(g, k, Rational(2), GadgetKind::S4));
    const Formula f = assemble_ccnf(gg);
    std::map<std::uint32_t, std::set<std::size_t>> gadgets_of;
    for (std::size_t i = 0; i < f.clauses.size(); ++i)
      for (Literal l : f.clauses[i]) gadgets_of[l.var().id].insert(i / 4);
    CHECK(gadgets_of.size() == g.edge_count());
    for (const auto& [v, nodes] : gadgets_of) {
      CHECK(nodes.size() == 2);
      const auto [u, w] = g.edges()[v - 1];
      CHECK(nodes == std::set<std::size_t>{u, w});
    }
    // Roles follow ascending neighbor order.
    for (std::uint32_t n = 0; n < g.node_count(); ++n)
      for (std::size_t r = 0; r < 3; ++r) {
        const GadgetEdge& e = gg.edges[gg.nodes[n].role_edges[r]];
        CHECK((e.u == n ? e.v : e.u) == g.neighbors(n)[r]);
      }
  }
}

TEST_CASE("petersen all-S4 instance satisfiability fixture", "[ccnf]") {
  const CubicGraph p = graphs::petersen();
  const Formula f = assemble_ccnf(p, CcnfSpec::uniform(p, 2, Rational(2), GadgetKind::S4));
  REQUIRE(oracle::satisfiable(f));
  const BruteForceResult r = brute_force_sat(f);
  CHECK(r.verdict == Verdict::Sat);
  CHECK(r.witness->satisfies(f));
}

TEST_CASE("assemble_ccnf rejects bad inputs", "[ccnf]") {
  const CubicGraph h = graphs::heawood();
  CHECK_THROWS_AS(assemble_ccnf(h, CcnfSpec::uniform(h, 3, Rational(2), GadgetKind::S4)), GraphError);
  const CubicGraph p = graphs::petersen();
  CHECK_THROWS_AS(assemble_ccnf(p, CcnfSpec::uniform(p, 3, Rational(2), GadgetKind::S4)), GraphError);
  CcnfSpec short_kinds = CcnfSpec::uniform(p, 2, Rational(2), GadgetKind::S4);
  short_kinds.kinds.pop_back();
  CHECK_THROWS_AS(assemble_ccnf(p, short_kinds), GraphError);
  CHECK_THROWS_AS(assemble_ccnf(p, CcnfSpec::uniform(p, 2, Rational(1), GadgetKind::S4)), GraphError);
  const CubicGraph path("path", 3, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(assemble_ccnf(path, CcnfSpec::uniform(path, 1, Rational(2), GadgetKind::S4)), GraphError);
}

TEST_CASE("random polarities are seed-determined", "[ccnf]") {
  const CubicGraph p = graphs::petersen();
  CHECK(random_polarities(p, 5) == random_polarities(p, 5));
  CHECK(random_polarities(p, 5) != random_polarities(p, 6));
  CcnfSpec spec = CcnfSpec::uniform(p, 2, Rational(2), GadgetKind::S3);
  spec.endpoint_positive = random_polarities(p, 5);
  const Formula f = assemble_ccnf(p, spec);
  CHECK(f.clauses.size() == 40);
}

TEST_CASE("check_ccnf_conditions", "[ccnf]") {
  const CubicGraph p = graphs::petersen();
  SECTION("petersen all-S4 passes") {
    const CcnfReport r = check_ccnf_conditions(p, CcnfSpec::uniform(p, 2, Rational(2), GadgetKind::S4));
    CHECK(r.condition_a);
    CHECK(r.moore_bound == 10);
    CHECK(r.required_s4 == 4);
    CHECK(r.cycle_count == 12);
    CHECK(r.min_s4_on_cycle == 5);
    CHECK(r.condition_b);
    CHECK(r.density_feasible);
    CHECK(r.passed);
  }
  SECTION("petersen all-S3 fails condition (b)") {
    const CcnfReport r = check_ccnf_conditions(p, CcnfSpec::uniform(p, 2, Rational(2), GadgetKind::S3));
    CHECK(r.condition_a);
    CHECK_FALSE(r.condition_b);
    CHECK(r.min_s4_on_cycle == 0);
    CHECK(r.cycles_below_requirement == 12);
    CHECK_FALSE(r.passed);
  }
  SECTION("k4 meets the k=1 Moore bound") {
    const CubicGraph k = graphs::k4();
    const CcnfReport r = check_ccnf_conditions(k, CcnfSpec::uniform(k, 1, Rational(2), GadgetKind::S4));
    CHECK(r.condition_a);
    CHECK(r.moore_bound == 4);
  }
  SECTION("mcgee misses the Moore bound") {
    const CubicGraph m = graphs::mcgee();
    const CcnfReport r = check_ccnf_conditions(m, CcnfSpec::uniform(m, 3, Rational(2), GadgetKind::S4));
    CHECK(r.moore_bound == 22);
    CHECK_FALSE(r.condition_a);
    CHECK(r.condition_b);
    CHECK(r.cycle_count == cycles_of_length(m, 7).size());
  }
  SECTION("fractional c0 rounds the requirement up") {
    const CcnfReport r = check_ccnf_conditions(p, CcnfSpec::uniform(p, 2, Rational(3, 2), GadgetKind::S4));
    CHECK(r.required_s4 == 3);
  }
  SECTION("density beyond the cycle length is flagged") {
    const CcnfReport r = check_ccnf_conditions(p, CcnfSpec::uniform(p, 2, Rational(3), GadgetKind::S4));
    CHECK_FALSE(r.density_feasible);
    CHECK_FALSE(r.condition_b);
  }
}

TEST_CASE("generation spec", "[ccnf][json]") {
  const GenSpec gs = parse_gen_spec(Json::parse(R"({"graph": {"nodes": 14, "min_girth": 5, "seed": 7},
                                                   "kinds": "all-s4", "c0": "3/2", "polarity_seed": 3})"));
  CHECK(gs.c0 == Rational(3, 2));
  CHECK(gs.polarity_seed == 3u);
  const GeneratedInstance a = generate(gs);
  const GeneratedInstance b = generate(gs);
  CHECK(a.formula == b.formula);
  CHECK(a.formula.clauses.size() == 56);
  CHECK(a.spec.k == 2);

  const GenSpec per_node = parse_gen_spec(Json::parse(R"({"graph": "k4", "kinds": ["s3","s4","s3","s4"], "c0": 2})"));
  const GeneratedInstance c = generate(per_node);
  CHECK(c.spec.kinds == std::vector<GadgetKind>{GadgetKind::S3, GadgetKind::S4, GadgetKind::S3, GadgetKind::S4});
  CHECK_THROWS_AS(generate(parse_gen_spec(Json::parse(R"({"graph": "heawood"})"))), GraphError);
  CHECK_THROWS_AS(generate(parse_gen_spec(Json::parse(R"({"graph": "nope"})"))), GraphError);
  CHECK_THROWS_AS(parse_gen_spec(Json::parse(R"({"kinds": ["s5"]})")), Error);
  CHECK(parse_gen_spec(Json::parse(R"({"c0": 1.5})")).c0 == Rational(3, 2));
}

TEST_CASE("random cubic graphs never have parallel edges", "[graph]") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const CubicGraph g = graphs::random_cubic({8, 0, seed});
    CHECK(*girth(g) >= 3);
  }
}
