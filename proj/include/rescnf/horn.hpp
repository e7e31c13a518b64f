#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "rescnf/assignment.hpp"
#include "rescnf/formula.hpp"

namespace rescnf {

struct PropagationResult {
  Assignment assignment;
  bool conflict = false;
  /// Clause falsified when `conflict` is set.
  std::size_t conflict_clause = 0;
};

/// Unit propagation in clause order: each step asserts the unit literal of
/// the lowest-index clause that is unit under the current assignment, which
/// is what a full rescan from the first clause after every assertion would
/// pick. Counters per clause make that scan incremental.
inline PropagationResult unit_propagate(const Formula& f) {
  PropagationResult r{Assignment(f.variable_count), false, 0};
  const std::size_t n = f.clauses.size();
  std::vector<std::vector<std::uint32_t>> occurrences(2 * (std::size_t{f.variable_count} + 1));
  std::vector<std::uint32_t> open(n);
  std::vector<bool> satisfied(n, false);
  std::set<std::size_t> pending;  // unsatisfied clauses with at most one open literal
  for (std::size_t ci = 0; ci < n; ++ci) {
    for (Literal l : f.clauses[ci]) occurrences[l.code()].push_back(static_cast<std::uint32_t>(ci));
    open[ci] = static_cast<std::uint32_t>(f.clauses[ci].size());
    if (open[ci] <= 1) pending.insert(ci);
  }
  while (!pending.empty()) {
    const std::size_t ci = *pending.begin();
    if (open[ci] == 0) {
      r.conflict = true;
      r.conflict_clause = ci;
      return r;
    }
    Literal unit;
    for (Literal l : f.clauses[ci])
      if (r.assignment.value(l) == Value::Unassigned) unit = l;
    r.assignment.assign(unit);
    for (std::uint32_t cj : occurrences[unit.code()]) {
      satisfied[cj] = true;
      --open[cj];
      pending.erase(cj);
    }
    for (std::uint32_t cj : occurrences[unit.negated().code()]) {
      --open[cj];
      if (!satisfied[cj] && open[cj] <= 1) pending.insert(cj);
    }
  }
  return r;
}

struct HornResult {
  Verdict verdict = Verdict::Sat;
  /// Minimal model (propagated values, everything else false) when SAT.
  Assignment model;
};

/// Decides a Horn formula. Throws NotHornError naming the first clause with
/// two positive literals.
inline HornResult horn_sat(const Formula& f) {
  require_horn(f);
  PropagationResult p = unit_propagate(f);
  if (p.conflict) return {Verdict::Unsat, {}};
  HornResult r{Verdict::Sat, std::move(p.assignment)};
  for (std::uint32_t v = 1; v <= f.variable_count; ++v)
    if (r.model[Variable{v}] == Value::Unassigned) r.model.set(Variable{v}, Value::False);
  return r;
}

}  // namespace rescnf
