#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rescnf/formula.hpp"

namespace rescnf {

/// Variables occurring with one polarity in `a` and the opposite one in `b`,
/// ascending.
inline std::vector<Variable> joint_variables(const Clause& a, const Clause& b) {
  std::vector<Variable> out;
  for (Literal l : a) {
    if (b.contains(l.negated()) && (out.empty() || out.back() != l.var())) out.push_back(l.var());
  }
  return out;
}

enum class Rejection { None, NoJoint, Tautology };

inline const char* to_string(Rejection r) {
  switch (r) {
    case Rejection::None: return "none";
    case Rejection::NoJoint: return "no-joint";
    case Rejection::Tautology: return "tautology";
  }
  return "?";
}

struct Resolvent {
  std::optional<Clause> consequent;
  Rejection rejection = Rejection::None;
  Variable joint{};
  /// True when the first argument holds the joint variable positively.
  bool first_is_positive = false;

  explicit operator bool() const { return consequent.has_value(); }
};

/// Applies the resolution rule. A pair with two or more joint variables
/// merges into a tautology, so it is rejected rather than resolved on any
/// one of them. A single-joint resolvent that is still tautological (only
/// possible when an antecedent already was) is rejected too.
inline Resolvent resolve(const Clause& a, const Clause& b) {
  Resolvent r;
  const auto joint = joint_variables(a, b);
  if (joint.empty()) {
    r.rejection = Rejection::NoJoint;
    return r;
  }
  if (joint.size() > 1) {
    r.rejection = Rejection::Tautology;
    return r;
  }
  r.joint = joint.front();
  r.first_is_positive = a.contains(Literal(r.joint, true)) && b.contains(Literal(r.joint, false));
  const Literal pos(r.joint, true);
  const Literal neg(r.joint, false);
  const Clause& p = r.first_is_positive ? a : b;
  const Clause& n = r.first_is_positive ? b : a;
  std::vector<Literal> lits;
  lits.reserve(a.size() + b.size());
  for (Literal l : p)
    if (l != pos) lits.push_back(l);
  for (Literal l : n)
    if (l != neg) lits.push_back(l);
  Clause c(std::move(lits));
  if (is_tautology(c)) {
    r.rejection = Rejection::Tautology;
    return r;
  }
  r.consequent = std::move(c);
  return r;
}

struct Budget {
  static constexpr std::size_t unlimited = std::numeric_limits<std::size_t>::max();

  std::size_t max_clauses = 1'000'000;
  std::size_t max_rounds = 64;
  std::size_t max_clause_width = unlimited;
};

/// Indices refer to `SaturationResult::derived`.
struct ResolutionStep {
  std::uint32_t positive_antecedent = 0;
  std::uint32_t negative_antecedent = 0;
  Variable joint_variable{};
  std::uint32_t consequent = 0;

  bool operator==(const ResolutionStep&) const = default;
};

struct SaturationResult {
  std::vector<Clause> derived;
  /// Distinct input clauses, which occupy `derived[0, input_count)`.
  std::size_t input_count = 0;
  std::vector<ResolutionStep> steps;
  bool empty_clause_found = false;
  std::size_t rounds = 0;
  std::vector<std::size_t> per_round_new;
  bool truncated = false;

  bool operator==(const SaturationResult&) const = default;
};

struct SaturateOptions {
  /// Growth measurement only needs counts; skipping steps saves memory on
  /// large instances.
  bool record_steps = true;
};

namespace detail {

/// Clause over variables 1..32 as a bit pair: positive literals in the low
/// word, negative literals in the high word.
inline std::uint64_t pack(const Clause& c) {
  std::uint64_t m = 0;
  for (Literal l : c) m |= std::uint64_t{1} << ((l.var().id - 1) + (l.positive() ? 0 : 32));
  return m;
}

inline Clause unpack(std::uint64_t m) {
  std::vector<Literal> lits;
  lits.reserve(static_cast<std::size_t>(std::popcount(m)));
  const auto pos = static_cast<std::uint32_t>(m);
  const auto neg = static_cast<std::uint32_t>(m >> 32);
  for (std::uint32_t both = pos | neg; both != 0; both &= both - 1) {
    const auto bit = static_cast<std::uint32_t>(std::countr_zero(both));
    if (neg >> bit & 1) lits.push_back(Literal::neg(bit + 1));
    if (pos >> bit & 1) lits.push_back(Literal::pos(bit + 1));
  }
  return Clause(std::move(lits));
}

inline bool packed_tautology(std::uint64_t m) { return (static_cast<std::uint32_t>(m) & (m >> 32)) != 0; }

}  // namespace detail

/// Level saturation. Round r resolves every pair with at least one clause
/// first derived in round r-1 (round 0 being the inputs) and keeps
/// consequents not seen before. Stops at a fixpoint, on the empty clause, or
/// when a budget bound is hit (then `truncated` is set). Resolvents wider
/// than `max_clause_width` are dropped and also mark the run truncated.
///
/// Formulas over at most 32 variables take a bit-packed path for partner
/// search, resolvent construction and duplicate lookup; results are
/// identical to the general path.
inline SaturationResult saturate(const Formula& f, const Budget& budget = {},
                                 const SaturateOptions& opts = {}) {
  SaturationResult res;
  const std::uint32_t vars = f.variable_count;
  const bool packed = vars <= 32;
  // Up to 11 variables every (positive set, negative set) pair gets a slot
  // in a flat table of 4^vars entries.
  const bool flat = vars <= 11;
  constexpr std::uint32_t absent = std::numeric_limits<std::uint32_t>::max();

  std::unordered_map<Clause, std::uint32_t, ClauseHash> index;
  std::unordered_map<std::uint64_t, std::uint32_t> packed_index;
  std::vector<std::uint32_t> flat_index(flat ? std::size_t{1} << (2 * vars) : 0, absent);
  std::vector<std::uint64_t> masks;
  // occurrences[literal code] -> derived indices containing that literal
  std::vector<std::vector<std::uint32_t>> occurrences(packed ? 0 : 2 * (std::size_t{vars} + 1));

  auto slot = [&](std::uint64_t m) -> std::uint32_t& {
    return flat_index[(m & 0xffffffffu) | ((m >> 32) << vars)];
  };
  auto find = [&](const Clause& c, std::uint64_t m) -> std::uint32_t {
    if (flat) return slot(m);
    if (packed) {
      auto it = packed_index.find(m);
      return it == packed_index.end() ? absent : it->second;
    }
    auto it = index.find(c);
    return it == index.end() ? absent : it->second;
  };
  // Caller guarantees `c` is not present yet.
  auto add = [&](Clause c, std::uint64_t m) -> std::uint32_t {
    const auto id = static_cast<std::uint32_t>(res.derived.size());
    if (flat) {
      slot(m) = id;
    } else if (packed) {
      packed_index.emplace(m, id);
    } else {
      index.emplace(c, id);
      for (Literal l : c) occurrences[l.code()].push_back(id);
    }
    if (packed) masks.push_back(m);
    if (c.empty()) res.empty_clause_found = true;
    res.derived.push_back(std::move(c));
    return id;
  };

  for (const Clause& c : f.clauses) {
    const std::uint64_t m = packed ? detail::pack(c) : 0;
    if (find(c, m) != absent) continue;
    if (res.derived.size() >= budget.max_clauses) {
      res.truncated = true;
      break;
    }
    add(c, m);
  }
  res.input_count = res.derived.size();
  if (res.empty_clause_found || res.truncated) return res;

  bool stop = false;
  std::size_t fresh = 0;
  const bool width_limited = budget.max_clause_width < 64;

  // Stores the consequent of derived[i] and derived[j] (i < j) and records
  // the step. `i_positive` tells which side holds the joint variable
  // positively. `c` may be left empty when `m` describes it.
  auto emit = [&](std::uint32_t i, std::uint32_t j, Variable joint, bool i_positive, Clause c, std::uint64_t m) {
    std::uint32_t out = find(c, m);
    if (out == absent) {
      if (res.derived.size() >= budget.max_clauses) {
        res.truncated = true;
        stop = true;
        return;
      }
      if (packed && c.empty() && m != 0) c = detail::unpack(m);
      out = add(std::move(c), m);
      ++fresh;
    }
    if (opts.record_steps) res.steps.push_back(ResolutionStep{i_positive ? i : j, i_positive ? j : i, joint, out});
    if (res.empty_clause_found) stop = true;
  };

  auto general = [&](std::uint32_t i, std::uint32_t j) {
    Resolvent r = resolve(res.derived[i], res.derived[j]);
    if (!r) return;
    if (r.consequent->size() > budget.max_clause_width) {
      res.truncated = true;
      return;
    }
    const std::uint64_t m = packed ? detail::pack(*r.consequent) : 0;
    emit(i, j, r.joint, r.first_is_positive, std::move(*r.consequent), m);
  };

  // clashes[i]: literals of the current clause whose complement occurs in
  // derived[i]. Two or more clashes in a non-tautological clause mean two
  // joint variables, which resolve() would reject anyway.
  std::vector<std::uint32_t> clashes;
  std::vector<std::uint32_t> partners;

  std::size_t lo = 0;
  std::size_t hi = res.derived.size();
  while (lo < hi && !stop) {
    if (res.rounds == budget.max_rounds) {
      res.truncated = true;
      break;
    }
    ++res.rounds;
    fresh = 0;
    for (std::size_t jw = lo; jw < hi && !stop; ++jw) {
      const auto j = static_cast<std::uint32_t>(jw);
      if (packed) {
        const std::uint64_t mj = masks[j];
        const bool tautological_j = detail::packed_tautology(mj);
        for (std::uint32_t i = 0; i < j && !stop; ++i) {
          const std::uint64_t mi = masks[i];
          const auto cross = static_cast<std::uint32_t>((mi & (mj >> 32)) | ((mi >> 32) & mj));
          if (cross == 0) continue;
          if (tautological_j || detail::packed_tautology(mi)) {
            general(i, j);
            continue;
          }
          if ((cross & (cross - 1)) != 0) continue;
          const auto bit = static_cast<std::uint32_t>(std::countr_zero(cross));
          const std::uint64_t m = (mi | mj) & ~((std::uint64_t{1} << bit) | (std::uint64_t{1} << (bit + 32)));
          if (width_limited && static_cast<std::size_t>(std::popcount(m)) > budget.max_clause_width) {
            res.truncated = true;
            continue;
          }
          const bool i_positive = (mi >> bit) & 1;
          // Duplicates are the common case once a formula nears its fixpoint.
          if (const std::uint32_t seen = flat ? slot(m) : absent; seen != absent) {
            if (opts.record_steps)
              res.steps.push_back(ResolutionStep{i_positive ? i : j, i_positive ? j : i, Variable{bit + 1}, seen});
            continue;
          }
          emit(i, j, Variable{bit + 1}, i_positive, Clause{}, m);
        }
        continue;
      }

      partners.clear();
      clashes.resize(res.derived.size());
      for (Literal l : res.derived[j])
        for (std::uint32_t i : occurrences[l.negated().code()]) {
          if (i >= j) break;
          if (clashes[i]++ == 0) partners.push_back(i);
        }
      if (partners.size() * 16 > j) {
        // Dense: reading the counters in index order beats sorting.
        partners.clear();
        for (std::uint32_t i = 0; i < j; ++i)
          if (clashes[i] != 0) partners.push_back(i);
      } else {
        std::sort(partners.begin(), partners.end());
      }
      const bool tautological_j = is_tautology(res.derived[j]);
      for (std::uint32_t i : partners) {
        const std::uint32_t clash = std::exchange(clashes[i], 0);
        if (stop || (clash > 1 && !tautological_j)) continue;
        general(i, j);
      }
    }
    res.per_round_new.push_back(fresh);
    lo = hi;
    hi = res.derived.size();
  }
  return res;
}

}  // namespace rescnf
