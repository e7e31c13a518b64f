#pragma once

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "rescnf/assignment.hpp"
#include "rescnf/formula.hpp"

namespace rescnf {

inline constexpr std::uint32_t default_oracle_limit = 24;

/// Variable cap for brute_force_sat: RESCNF_ORACLE_LIMIT if set to a
/// positive integer, otherwise 24.
inline std::uint32_t oracle_limit_from_env() {
  if (const char* s = std::getenv("RESCNF_ORACLE_LIMIT")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(s, &end, 10);
    if (end != s && *end == '\0' && v > 0 && v <= 64) return static_cast<std::uint32_t>(v);
  }
  return default_oracle_limit;
}

struct BruteForceResult {
  Verdict verdict = Verdict::Unsat;
  /// Total satisfying assignment when SAT.
  std::optional<Assignment> witness;
};

/// Backtracking over variables 1..n in order. A clause is checked as soon as
/// its largest variable is assigned, so no propagation is involved.
inline BruteForceResult brute_force_sat(const Formula& f, std::uint32_t limit = oracle_limit_from_env()) {
  const std::uint32_t n = f.variable_count;
  if (n > limit)
    throw OracleLimitError("brute-force oracle limited to " + std::to_string(limit) + " variables, formula has " +
                           std::to_string(n));
  std::vector<std::vector<const Clause*>> closes_at(std::size_t{n} + 1);
  for (const Clause& c : f.clauses) {
    if (c.empty()) return {};
    closes_at[c.max_var()].push_back(&c);
  }

  Assignment a(n);
  std::uint32_t depth = 1;
  std::vector<bool> tried_second(std::size_t{n} + 2, false);
  // Iterative DFS: at each depth try false, then true.
  auto consistent = [&](std::uint32_t v) {
    for (const Clause* c : closes_at[v])
      if (!a.satisfies(*c)) return false;
    return true;
  };
  if (n == 0) return {Verdict::Sat, a};
  a.set(Variable{1}, Value::False);
  tried_second[1] = false;
  while (true) {
    if (consistent(depth)) {
      if (depth == n) break;
      ++depth;
      a.set(Variable{depth}, Value::False);
      tried_second[depth] = false;
      continue;
    }
    // Backtrack to the deepest level with an untried branch.
    while (depth >= 1 && tried_second[depth]) {
      a.set(Variable{depth}, Value::Unassigned);
      --depth;
    }
    if (depth == 0) return {};
    a.set(Variable{depth}, Value::True);
    tried_second[depth] = true;
  }
  if (!a.satisfies(f)) throw Error("brute-force oracle produced a non-model");
  return {Verdict::Sat, a};
}

}  // namespace rescnf
