#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rescnf/bounds.hpp"
#include "rescnf/formula.hpp"
#include "rescnf/graph.hpp"
#include "rescnf/rational.hpp"
#include "rescnf/scnf.hpp"

namespace rescnf {

/// Parameters of a chaotic CNF instance over a fixed cubic graph.
struct CcnfSpec {
  unsigned k = 1;  // girth = 2k + 1
  Rational c0{2};
  std::vector<GadgetKind> kinds;  // per node
  /// Per edge: whether the gadget at the lower / higher endpoint uses the
  /// positive literal of the edge variable in its role.
  std::vector<std::array<bool, 2>> endpoint_positive;

  static CcnfSpec uniform(const CubicGraph& g, unsigned k, Rational c0, GadgetKind kind) {
    return CcnfSpec{k, c0, std::vector<GadgetKind>(g.node_count(), kind),
                    std::vector<std::array<bool, 2>>(g.edge_count(), {true, true})};
  }
};

/// Seed-driven polarity per edge endpoint.
inline std::vector<std::array<bool, 2>> random_polarities(const CubicGraph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::array<bool, 2>> out(g.edge_count());
  for (auto& e : out) {
    e[0] = (rng() >> 63) != 0;
    e[1] = (rng() >> 63) != 0;
  }
  return out;
}

struct GadgetNode {
  GadgetKind kind = GadgetKind::S4;
  /// Incident edge per role P, Q, R, ordered by ascending neighbor index.
  std::array<std::uint32_t, 3> role_edges{};
  std::array<bool, 3> role_positive{true, true, true};
};

struct GadgetEdge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  Variable var{};
  std::array<bool, 2> positive{true, true};
};

/// Cubic graph whose nodes carry simplex gadgets and whose edges carry the
/// variables shared by their endpoint gadgets.
struct GadgetGraph {
  std::string name;
  std::vector<GadgetNode> nodes;
  std::vector<GadgetEdge> edges;
  std::size_t girth = 0;
};

/// Validates the graph and spec and lays out one variable per edge
/// (edge index + 1) and one gadget per node.
inline GadgetGraph build_gadget_graph(const CubicGraph& g, const CcnfSpec& spec) {
  if (!g.is_cubic()) throw GraphError("graph " + g.name() + " is not cubic");
  if (!g.connected()) throw GraphError("graph " + g.name() + " is not connected");
  const auto gi = girth(g);
  if (!gi) throw GraphError("graph " + g.name() + " has no cycle");
  if (*gi % 2 == 0) throw GraphError("graph " + g.name() + " has even girth " + std::to_string(*gi));
  if (*gi != 2 * std::size_t{spec.k} + 1)
    throw GraphError("girth " + std::to_string(*gi) + " does not equal 2k+1 for k=" + std::to_string(spec.k));
  if (spec.kinds.size() != g.node_count()) throw GraphError("gadget kind list does not match node count");
  if (spec.endpoint_positive.size() != g.edge_count()) throw GraphError("polarity list does not match edge count");
  if (!(spec.c0 > Rational(1))) throw GraphError("c0 must exceed 1");

  GadgetGraph out;
  out.name = g.name();
  out.girth = *gi;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges()[e];
    out.edges.push_back(GadgetEdge{u, v, Variable{static_cast<std::uint32_t>(e + 1)}, spec.endpoint_positive[e]});
  }
  for (std::uint32_t n = 0; n < g.node_count(); ++n) {
    GadgetNode node;
    node.kind = spec.kinds[n];
    for (std::size_t r = 0; r < 3; ++r) {
      const auto w = g.neighbors(n)[r];
      const auto e = static_cast<std::uint32_t>(*g.edge_index(n, w));
      node.role_edges[r] = e;
      node.role_positive[r] = out.edges[e].positive[out.edges[e].u == n ? 0 : 1];
    }
    out.nodes.push_back(node);
  }
  return out;
}

inline Formula assemble_ccnf(const GadgetGraph& gg) {
  std::vector<Clause> clauses;
  clauses.reserve(4 * gg.nodes.size());
  for (const GadgetNode& n : gg.nodes) {
    GadgetRoles roles;
    for (std::size_t r = 0; r < 3; ++r) {
      roles.vars[r] = gg.edges[n.role_edges[r]].var;
      roles.positive[r] = n.role_positive[r];
    }
    Formula t = simplex(n.kind, roles);
    for (Clause& c : t.clauses) clauses.push_back(std::move(c));
  }
  return Formula(std::move(clauses), static_cast<std::uint32_t>(gg.edges.size()));
}

/// One gadget per node over its three edge variables; 4 clauses per node,
/// one variable per edge.
inline Formula assemble_ccnf(const CubicGraph& g, const CcnfSpec& spec) {
  return assemble_ccnf(build_gadget_graph(g, spec));
}

struct CcnfReport {
  std::size_t nodes = 0;
  std::optional<std::size_t> girth;
  unsigned k = 0;
  std::uint64_t moore_bound = 0;
  /// Node count equals the Moore bound and girth is 2k+1.
  bool condition_a = false;
  std::int64_t required_s4 = 0;  // ceil(k * c0)
  std::size_t cycle_count = 0;
  std::size_t min_s4_on_cycle = 0;
  std::size_t cycles_below_requirement = 0;
  /// Every cycle of length 2k+1 carries at least ceil(k * c0) S4 gadgets.
  bool condition_b = false;
  /// k * c0 <= 2k + 1, i.e. the S4 requirement fits on one girth cycle.
  bool density_feasible = false;
  bool passed = false;
};

inline CcnfReport check_ccnf_conditions(const CubicGraph& g, const CcnfSpec& spec) {
  CcnfReport r;
  r.nodes = g.node_count();
  r.girth = girth(g);
  r.k = spec.k;
  r.moore_bound = moore_size(spec.k);
  const std::size_t cycle_len = 2 * std::size_t{spec.k} + 1;
  r.condition_a = r.girth && *r.girth == cycle_len && r.nodes == r.moore_bound;
  r.required_s4 = ceil(static_cast<std::int64_t>(spec.k) * spec.c0);
  r.density_feasible = !(static_cast<std::int64_t>(spec.k) * spec.c0 > Rational(static_cast<std::int64_t>(cycle_len)));

  const auto cycles = cycles_of_length(g, cycle_len);
  r.cycle_count = cycles.size();
  r.min_s4_on_cycle = cycle_len;
  for (const auto& cyc : cycles) {
    std::size_t s4 = 0;
    for (auto n : cyc)
      if (n < spec.kinds.size() && spec.kinds[n] == GadgetKind::S4) ++s4;
    r.min_s4_on_cycle = std::min(r.min_s4_on_cycle, s4);
    if (static_cast<std::int64_t>(s4) < r.required_s4) ++r.cycles_below_requirement;
  }
  if (cycles.empty()) r.min_s4_on_cycle = 0;
  r.condition_b = !cycles.empty() && r.cycles_below_requirement == 0 && r.girth && *r.girth == cycle_len;
  r.passed = r.condition_a && r.condition_b;
  return r;
}

}  // namespace rescnf
