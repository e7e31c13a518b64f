#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "rescnf/error.hpp"

namespace rescnf {

/// 1-based variable id, DIMACS convention.
struct Variable {
  std::uint32_t id = 0;

  constexpr auto operator<=>(const Variable&) const = default;
};

/// A literal is stored as `2 * var + polarity`, so ordering by code gives
/// ascending variable id with the negative literal first.
class Literal {
 public:
  constexpr Literal() = default;
  constexpr Literal(Variable v, bool positive) : code_(2 * v.id + (positive ? 1u : 0u)) {}

  static constexpr Literal from_dimacs(int lit) {
    assert(lit != 0);
    return Literal(Variable{static_cast<std::uint32_t>(lit < 0 ? -lit : lit)}, lit > 0);
  }
  static constexpr Literal pos(std::uint32_t var) { return Literal(Variable{var}, true); }
  static constexpr Literal neg(std::uint32_t var) { return Literal(Variable{var}, false); }

  constexpr Variable var() const { return Variable{code_ >> 1}; }
  constexpr bool positive() const { return (code_ & 1u) != 0; }
  constexpr Literal negated() const { return from_code(code_ ^ 1u); }
  constexpr Literal operator~() const { return negated(); }
  constexpr int to_dimacs() const {
    int v = static_cast<int>(code_ >> 1);
    return positive() ? v : -v;
  }
  constexpr std::uint32_t code() const { return code_; }

  constexpr auto operator<=>(const Literal&) const = default;

 private:
  static constexpr Literal from_code(std::uint32_t c) {
    Literal l;
    l.code_ = c;
    return l;
  }
  std::uint32_t code_ = 0;
};

enum class ClauseKind { PositiveUnit, Definite, Goal, NonHorn };

inline const char* to_string(ClauseKind k) {
  switch (k) {
    case ClauseKind::PositiveUnit: return "positive-unit";
    case ClauseKind::Definite: return "definite";
    case ClauseKind::Goal: return "goal";
    case ClauseKind::NonHorn: return "non-horn";
  }
  return "?";
}

/// Canonically ordered, duplicate-free set of literals. Both polarities of
/// one variable may coexist (a tautology); the empty clause is falsum.
class Clause {
 public:
  Clause() = default;
  Clause(std::initializer_list<Literal> lits) : lits_(lits) { normalize(); }
  explicit Clause(std::vector<Literal> lits) : lits_(std::move(lits)) { normalize(); }

  static Clause from_dimacs(std::span<const int> lits) {
    std::vector<Literal> v;
    v.reserve(lits.size());
    for (int l : lits) v.push_back(Literal::from_dimacs(l));
    return Clause(std::move(v));
  }
  static Clause from_dimacs(std::initializer_list<int> lits) {
    return from_dimacs(std::span<const int>(lits.begin(), lits.size()));
  }

  std::span<const Literal> literals() const { return lits_; }
  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  auto begin() const { return lits_.begin(); }
  auto end() const { return lits_.end(); }
  const Literal& operator[](std::size_t i) const { return lits_[i]; }

  bool contains(Literal l) const { return std::binary_search(lits_.begin(), lits_.end(), l); }

  /// Largest variable id referenced, 0 for the empty clause.
  std::uint32_t max_var() const { return lits_.empty() ? 0 : lits_.back().var().id; }

  std::size_t positive_count() const {
    return static_cast<std::size_t>(
        std::count_if(lits_.begin(), lits_.end(), [](Literal l) { return l.positive(); }));
  }

  std::vector<int> to_dimacs() const {
    std::vector<int> out;
    out.reserve(lits_.size());
    for (Literal l : lits_) out.push_back(l.to_dimacs());
    return out;
  }

  /// "(1 -2 3)" style rendering used in diagnostics.
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < lits_.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(lits_[i].to_dimacs());
    }
    return s + ")";
  }

  bool operator==(const Clause&) const = default;
  auto operator<=>(const Clause&) const = default;

 private:
  void normalize() {
    std::sort(lits_.begin(), lits_.end());
    lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
  }
  std::vector<Literal> lits_;
};

struct ClauseHash {
  std::size_t operator()(const Clause& c) const noexcept {
    // FNV-1a over literal codes.
    std::uint64_t h = 1469598103934665603ull;
    for (Literal l : c) {
      h ^= l.code();
      h *= 1099511628211ull;
    }
    h ^= c.size();
    return static_cast<std::size_t>(h);
  }
};

inline ClauseKind classify(const Clause& c) {
  const std::size_t p = c.positive_count();
  if (p >= 2) return ClauseKind::NonHorn;
  if (p == 0) return ClauseKind::Goal;
  return c.size() == 1 ? ClauseKind::PositiveUnit : ClauseKind::Definite;
}

inline bool is_tautology(const Clause& c) {
  // Complementary literals are adjacent in canonical order.
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i].var() == c[i - 1].var()) return true;
  return false;
}

/// Ordered clause list plus declared variable count. Prefix comments from a
/// parsed file are carried along for re-emission; they take no part in
/// equality.
struct Formula {
  std::vector<Clause> clauses;
  std::uint32_t variable_count = 0;
  std::vector<std::string> comments;

  Formula() = default;
  Formula(std::vector<Clause> cs, std::uint32_t vars) : clauses(std::move(cs)), variable_count(vars) {
    for (const Clause& c : clauses)
      if (c.max_var() > variable_count)
        throw Error("literal " + std::to_string(c.max_var()) + " exceeds variable count " +
                    std::to_string(variable_count));
  }

  /// Builds a formula whose variable count is the largest id referenced.
  static Formula from_clauses(std::vector<Clause> cs) {
    std::uint32_t vars = 0;
    for (const Clause& c : cs) vars = std::max(vars, c.max_var());
    return Formula(std::move(cs), vars);
  }

  std::size_t size() const { return clauses.size(); }
  bool empty() const { return clauses.empty(); }

  bool operator==(const Formula& o) const {
    return variable_count == o.variable_count && clauses == o.clauses;
  }
};

/// Returns the index of the first non-Horn clause, or `f.size()` if none.
inline std::size_t first_non_horn(const Formula& f) {
  for (std::size_t i = 0; i < f.clauses.size(); ++i)
    if (classify(f.clauses[i]) == ClauseKind::NonHorn) return i;
  return f.clauses.size();
}

inline bool is_horn(const Formula& f) { return first_non_horn(f) == f.clauses.size(); }

inline void require_horn(const Formula& f) {
  const std::size_t bad = first_non_horn(f);
  if (bad != f.clauses.size()) throw NotHornError(bad, f.clauses[bad].to_string());
}

}  // namespace rescnf

template <>
struct std::hash<rescnf::Clause> : rescnf::ClauseHash {};
