#pragma once

#include <cstdint>
#include <vector>

#include "rescnf/formula.hpp"

namespace rescnf {

enum class Value : std::int8_t { Unassigned, True, False };

enum class Verdict { Sat, Unsat };

inline const char* to_string(Verdict v) { return v == Verdict::Sat ? "SAT" : "UNSAT"; }

/// Partial assignment over variables 1..variable_count.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::uint32_t variable_count) : values_(std::size_t{variable_count} + 1, Value::Unassigned) {}

  std::uint32_t variable_count() const { return values_.empty() ? 0 : static_cast<std::uint32_t>(values_.size() - 1); }

  Value operator[](Variable v) const { return values_[v.id]; }
  void set(Variable v, Value x) { values_[v.id] = x; }
  void assign(Literal l) { values_[l.var().id] = l.positive() ? Value::True : Value::False; }

  Value value(Literal l) const {
    Value v = values_[l.var().id];
    if (v == Value::Unassigned || l.positive()) return v;
    return v == Value::True ? Value::False : Value::True;
  }

  bool is_total() const {
    for (std::size_t i = 1; i < values_.size(); ++i)
      if (values_[i] == Value::Unassigned) return false;
    return true;
  }

  bool satisfies(const Clause& c) const {
    for (Literal l : c)
      if (value(l) == Value::True) return true;
    return false;
  }

  bool satisfies(const Formula& f) const {
    for (const Clause& c : f.clauses)
      if (!satisfies(c)) return false;
    return true;
  }

  /// DIMACS-style model line values, e.g. {1, -2, 3}; unassigned omitted.
  std::vector<int> to_dimacs() const {
    std::vector<int> out;
    for (std::uint32_t v = 1; v < values_.size(); ++v) {
      if (values_[v] == Value::True) out.push_back(static_cast<int>(v));
      if (values_[v] == Value::False) out.push_back(-static_cast<int>(v));
    }
    return out;
  }

  bool operator==(const Assignment&) const = default;

 private:
  std::vector<Value> values_;
};

}  // namespace rescnf
