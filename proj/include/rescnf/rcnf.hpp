#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "rescnf/formula.hpp"
#include "rescnf/resolution.hpp"

namespace rescnf {

/// Assigns meta variables to object-level clauses in first-use order. The
/// empty clause never receives one.
class MetaTable {
 public:
  Variable id(const Clause& c) {
    if (c.empty()) throw Error("the empty clause has no meta variable");
    auto [it, inserted] = ids_.try_emplace(c, static_cast<std::uint32_t>(clauses_.size() + 1));
    if (inserted) clauses_.push_back(c);
    return Variable{it->second};
  }

  std::optional<Variable> find(const Clause& c) const {
    if (auto it = ids_.find(c); it != ids_.end()) return Variable{it->second};
    return std::nullopt;
  }

  /// Object clause for meta variable `v` (1-based).
  const Clause& clause(Variable v) const { return clauses_.at(v.id - 1); }
  const std::vector<Clause>& clauses() const { return clauses_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(clauses_.size()); }

 private:
  std::unordered_map<Clause, std::uint32_t, ClauseHash> ids_;
  std::vector<Clause> clauses_;
};

/// Meta-level Horn formula whose variables stand for object-level clauses.
struct RcnfEncoding {
  MetaTable meta_variable_of;
  std::vector<Clause> unit_assertions;
  std::vector<Clause> resolution_clauses;
  Formula formula;
  /// Saturation hit its budget; the encoding is then incomplete and its
  /// satisfiability says nothing about the source formula.
  bool truncated = false;
  bool empty_clause_found = false;
  std::size_t derived_count = 0;
  std::size_t step_count = 0;
};

/// Saturates `f` and serializes the derivation: one unit per distinct input
/// clause and one clause (~a | ~b | r) per resolution step, where the
/// consequent literal is dropped when the step derives the empty clause.
inline RcnfEncoding rcnf_of(const Formula& f, const Budget& budget = {}) {
  RcnfEncoding enc;
  SaturationResult sat = saturate(f, budget);
  enc.truncated = sat.truncated;
  enc.empty_clause_found = sat.empty_clause_found;
  enc.derived_count = sat.derived.size();
  enc.step_count = sat.steps.size();

  std::vector<std::uint32_t> meta(sat.derived.size(), 0);
  for (std::size_t i = 0; i < sat.derived.size(); ++i)
    if (!sat.derived[i].empty()) meta[i] = enc.meta_variable_of.id(sat.derived[i]).id;

  for (std::size_t i = 0; i < sat.input_count; ++i) {
    // An empty input clause asserts falsum directly.
    enc.unit_assertions.push_back(meta[i] ? Clause{Literal::pos(meta[i])} : Clause{});
  }
  for (const ResolutionStep& s : sat.steps) {
    std::vector<Literal> lits{Literal::neg(meta[s.positive_antecedent]), Literal::neg(meta[s.negative_antecedent])};
    if (meta[s.consequent]) lits.push_back(Literal::pos(meta[s.consequent]));
    enc.resolution_clauses.emplace_back(std::move(lits));
  }

  std::vector<Clause> all = enc.unit_assertions;
  all.insert(all.end(), enc.resolution_clauses.begin(), enc.resolution_clauses.end());
  enc.formula = Formula(std::move(all), enc.meta_variable_of.size());
  return enc;
}

namespace detail {

inline Clause meta_clause(std::initializer_list<std::pair<Variable, bool>> lits) {
  std::vector<Literal> v;
  for (auto [var, pos] : lits) v.emplace_back(var, pos);
  return Clause(std::move(v));
}

/// Head literal (the positive one, else the first) followed by the rest.
inline std::vector<Literal> head_first(const Clause& c) {
  std::vector<Literal> lits(c.begin(), c.end());
  auto head = std::find_if(lits.begin(), lits.end(), [](Literal l) { return l.positive(); });
  if (head != lits.end()) std::rotate(lits.begin(), head, head + 1);
  return lits;
}

inline void check_gadget_input(const Clause& c) {
  if (classify(c) == ClauseKind::NonHorn) throw NotHornError(0, c.to_string());
  if (c.empty() || c.size() > 3)
    throw Error("gadget templates cover Horn clauses of width 1 to 3, got " + c.to_string());
}

}  // namespace detail

/// Rewrites every Horn clause wider than three into a chain over fresh
/// variables: I j k l ... becomes (I -j -f0)(f0 -k -f1)...(f_last -z), one
/// original literal per link after the first. Fresh variables are numbered
/// from variable_count + 1 in clause order. When the clause has no positive
/// literal its first literal takes the head role.
inline Formula split_horn3(const Formula& g) {
  require_horn(g);
  std::vector<Clause> out;
  out.reserve(g.clauses.size());
  std::uint32_t next_fresh = g.variable_count + 1;

  for (const Clause& c : g.clauses) {
    if (c.size() <= 3) {
      out.push_back(c);
      continue;
    }
    const auto lits = detail::head_first(c);
    Literal link = Literal::neg(next_fresh++);
    out.push_back(Clause{lits[0], lits[1], link});
    for (std::size_t i = 2; i + 1 < lits.size(); ++i) {
      Literal succ = Literal::neg(next_fresh++);
      out.push_back(Clause{link.negated(), lits[i], succ});
      link = succ;
    }
    out.push_back(Clause{link.negated(), lits.back()});
  }
  return Formula(std::move(out), next_fresh - 1);
}

/// A Horn formula over meta variables together with the object clause each
/// meta variable stands for.
struct MetaFormula {
  Formula formula;
  MetaTable table;
};

/// Appends the unit-resolution gadget for one Horn clause of width 1..3.
/// Meta variables come from `table`, so identical sub-clauses share one
/// variable across calls. Emits 2, 3 or 6 clauses by width.
inline void append_gadget(const Clause& c, MetaTable& table, std::vector<Clause>& out) {
  detail::check_gadget_input(c);
  const auto lits = detail::head_first(c);
  const Literal head = lits[0];
  using detail::meta_clause;

  if (lits.size() == 1) {
    const Variable r = table.id(Clause{head});
    const Variable r_bar = table.id(Clause{~head});
    out.push_back(meta_clause({{r, true}}));
    out.push_back(meta_clause({{r, false}, {r_bar, false}}));
    return;
  }
  if (lits.size() == 2) {
    const Variable whole = table.id(c);
    const Variable p = table.id(Clause{head});
    const Variable q = table.id(Clause{~lits[1]});
    const Variable p_bar = table.id(Clause{~head});
    out.push_back(meta_clause({{whole, true}}));
    out.push_back(meta_clause({{p, true}, {whole, false}, {q, false}}));
    out.push_back(meta_clause({{p, false}, {p_bar, false}}));
    return;
  }
  const Literal j = lits[1];
  const Literal k = lits[2];
  const Variable whole = table.id(c);
  const Variable i_k = table.id(Clause{head, k});
  const Variable unit_j = table.id(Clause{~j});
  const Variable i_j = table.id(Clause{head, j});
  const Variable unit_k = table.id(Clause{~k});
  const Variable i = table.id(Clause{head});
  const Variable i_bar = table.id(Clause{~head});
  out.push_back(meta_clause({{whole, true}}));
  out.push_back(meta_clause({{i_k, true}, {whole, false}, {unit_j, false}}));
  out.push_back(meta_clause({{i_j, true}, {whole, false}, {unit_k, false}}));
  out.push_back(meta_clause({{i, true}, {i_j, false}, {unit_j, false}}));
  out.push_back(meta_clause({{i, true}, {i_k, false}, {unit_k, false}}));
  out.push_back(meta_clause({{i, false}, {i_bar, false}}));
}

/// Gadget for a single clause with its own meta-variable numbering.
inline MetaFormula gadget_rcnf(const Clause& c) {
  MetaFormula m;
  std::vector<Clause> out;
  append_gadget(c, m.table, out);
  m.formula = Formula(std::move(out), m.table.size());
  return m;
}

/// Horn formula to RCNF: split to width 3, then one gadget per clause with
/// meta variables shared by sub-clause identity. An empty clause carries over
/// as the empty meta clause.
inline MetaFormula horn_to_rcnf(const Formula& g) {
  const Formula narrow = split_horn3(g);
  MetaFormula m;
  std::vector<Clause> out;
  for (const Clause& c : narrow.clauses) {
    if (c.empty()) {
      out.emplace_back();
      continue;
    }
    append_gadget(c, m.table, out);
  }
  m.formula = Formula(std::move(out), m.table.size());
  return m;
}

}  // namespace rescnf
