#pragma once

#include <array>
#include <string>
#include <string_view>

#include "rescnf/formula.hpp"

namespace rescnf {

enum class GadgetKind { S3, S4 };

inline const char* to_string(GadgetKind k) { return k == GadgetKind::S3 ? "S3" : "S4"; }

/// Three role slots P, Q, R: the variable in each and whether the role is
/// the positive literal of that variable.
struct GadgetRoles {
  std::array<Variable, 3> vars;
  std::array<bool, 3> positive{true, true, true};
};

namespace detail {

inline std::array<Literal, 3> role_literals(const GadgetRoles& r) {
  if (r.vars[0] == r.vars[1] || r.vars[1] == r.vars[2] || r.vars[0] == r.vars[2])
    throw Error("simplex gadget needs three distinct variables");
  for (Variable v : r.vars)
    if (v.id == 0) throw Error("variable ids are 1-based");
  return {Literal(r.vars[0], r.positive[0]), Literal(r.vars[1], r.positive[1]), Literal(r.vars[2], r.positive[2])};
}

}  // namespace detail

/// 3-simplex: at most one role true (pairwise exclusions) and at least one
/// true. Clause order: ~P~Q, ~Q~R, ~P~R, PQR.
inline Formula s3cnf(const GadgetRoles& roles) {
  const auto [p, q, r] = detail::role_literals(roles);
  return Formula::from_clauses({Clause{~p, ~q}, Clause{~q, ~r}, Clause{~p, ~r}, Clause{p, q, r}});
}

/// 4-simplex: ~P~QR, P~Q~R, ~PQ~R, PQR.
inline Formula s4cnf(const GadgetRoles& roles) {
  const auto [p, q, r] = detail::role_literals(roles);
  return Formula::from_clauses({Clause{~p, ~q, r}, Clause{p, ~q, ~r}, Clause{~p, q, ~r}, Clause{p, q, r}});
}

inline Formula simplex(GadgetKind kind, const GadgetRoles& roles) {
  return kind == GadgetKind::S3 ? s3cnf(roles) : s4cnf(roles);
}

}  // namespace rescnf
