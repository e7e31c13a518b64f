#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "rescnf/bounds.hpp"
#include "rescnf/formula.hpp"
#include "rescnf/rational.hpp"
#include "rescnf/resolution.hpp"
#include "rescnf/scnf.hpp"

namespace rescnf {

/// Where a measured formula came from. `ad_hoc` marks formulas without
/// generation metadata; k and c0 are then absent.
struct InstanceDescriptor {
  std::string graph = "ad-hoc";
  std::optional<unsigned> k;
  std::optional<Rational> c0;
  std::string kinds;
  std::optional<std::uint64_t> seed;
  bool ad_hoc = true;

  std::string to_string() const {
    if (ad_hoc) return "ad-hoc";
    std::string s = graph;
    if (k) s += ";k=" + std::to_string(*k);
    if (c0) s += ";c0=" + c0->to_string();
    if (!kinds.empty()) s += ";kinds=" + kinds;
    if (seed) s += ";seed=" + std::to_string(*seed);
    return s;
  }
};

struct GrowthReport {
  InstanceDescriptor instance;
  std::size_t input_size = 0;
  std::vector<std::size_t> per_round_new;
  std::size_t total_consequents = 0;
  /// total_consequents / input_size
  double ratio = 0;
  std::size_t rounds = 0;
  bool truncated = false;
  bool empty_clause_found = false;
  std::optional<PredictedRatio> predicted_ratio;
};

/// Saturates `f` counting distinct non-tautological consequents (inputs
/// excluded) per round.
inline GrowthReport measure_growth(const Formula& f, const Budget& budget = {}, InstanceDescriptor instance = {}) {
  GrowthReport r;
  r.instance = std::move(instance);
  r.input_size = f.clauses.size();
  if (!f.clauses.empty()) {
    const SaturationResult s = saturate(f, budget, SaturateOptions{false});
    r.per_round_new = s.per_round_new;
    r.rounds = s.rounds;
    r.truncated = s.truncated;
    r.empty_clause_found = s.empty_clause_found;
  }
  r.total_consequents = std::accumulate(r.per_round_new.begin(), r.per_round_new.end(), std::size_t{0});
  r.ratio = r.input_size ? static_cast<double>(r.total_consequents) / static_cast<double>(r.input_size) : 0.0;
  if (r.instance.k && r.instance.c0) r.predicted_ratio = closed_form_ratio(*r.instance.k, *r.instance.c0);
  return r;
}

struct DoublingTrace {
  std::size_t chain_length = 0;
  /// Seed frontier first, then the frontier after each gadget.
  std::vector<std::size_t> frontier_sizes;
};

/// Pushes a resolution wave through a chain of S4 gadgets. The link into
/// gadget 0 is the one variable it shares with the seed; the link into
/// gadget i > 0 is the one variable shared with gadget i-1. Each step
/// replaces the frontier by all accepted resolvents on the link variable.
inline DoublingTrace doubling_check(const std::vector<GadgetRoles>& chain, const Clause& seed) {
  auto shared = [](const std::vector<Variable>& a, const std::vector<Variable>& b) {
    std::vector<Variable> out;
    for (Variable x : a)
      if (std::find(b.begin(), b.end(), x) != b.end()) out.push_back(x);
    return out;
  };
  std::vector<Variable> previous;
  for (Literal l : seed) previous.push_back(l.var());

  DoublingTrace t;
  t.chain_length = chain.size();
  std::vector<Clause> frontier{seed};
  t.frontier_sizes.push_back(frontier.size());
  for (std::size_t g = 0; g < chain.size(); ++g) {
    std::vector<Variable> vars(chain[g].vars.begin(), chain[g].vars.end());
    const auto link = shared(previous, vars);
    if (link.size() != 1)
      throw Error("gadget " + std::to_string(g) + " shares " + std::to_string(link.size()) +
                  " variables with its predecessor, expected exactly 1");
    const Formula gadget = s4cnf(chain[g]);
    std::vector<Clause> next;
    std::unordered_set<Clause, ClauseHash> seen;
    for (const Clause& c : frontier) {
      for (const Clause& d : gadget.clauses) {
        Resolvent r = resolve(c, d);
        if (!r || r.joint != link.front()) continue;
        if (seen.insert(*r.consequent).second) next.push_back(std::move(*r.consequent));
      }
    }
    frontier = std::move(next);
    t.frontier_sizes.push_back(frontier.size());
    previous = std::move(vars);
  }
  return t;
}

/// Chain of `length` all-positive S4 gadgets over (2i+1, 2i+2, 2i+3): each
/// gadget's R variable is the next one's P. Seed it with the unit (x1).
inline std::vector<GadgetRoles> s4_chain(std::size_t length) {
  std::vector<GadgetRoles> chain;
  for (std::size_t i = 0; i < length; ++i) {
    const auto b = static_cast<std::uint32_t>(2 * i + 1);
    chain.push_back(GadgetRoles{{Variable{b}, Variable{b + 1}, Variable{b + 2}}, {true, true, true}});
  }
  return chain;
}

}  // namespace rescnf
