#pragma once

// JSON and CSV forms of the library's reports. Requires nlohmann/json.

#include <cstdio>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "rescnf/ccnf.hpp"
#include "rescnf/growth.hpp"
#include "rescnf/rcnf.hpp"
#include "rescnf/resolution.hpp"

namespace rescnf {

using Json = nlohmann::ordered_json;

inline Json to_json(const SaturationResult& s) {
  Json derived = Json::array();
  for (const Clause& c : s.derived) derived.push_back(c.to_dimacs());
  Json steps = Json::array();
  for (const ResolutionStep& st : s.steps)
    steps.push_back({{"pos", st.positive_antecedent},
                     {"neg", st.negative_antecedent},
                     {"var", st.joint_variable.id},
                     {"out", st.consequent}});
  return Json{{"derived", std::move(derived)},
              {"steps", std::move(steps)},
              {"rounds", s.rounds},
              {"empty_clause_found", s.empty_clause_found},
              {"truncated", s.truncated},
              {"per_round_new", s.per_round_new}};
}

/// {"meta_vars": [{"id": n, "clause": [lits]}]}
inline Json meta_sidecar(const MetaTable& t) {
  Json vars = Json::array();
  for (std::uint32_t i = 0; i < t.size(); ++i)
    vars.push_back({{"id", i + 1}, {"clause", t.clauses()[i].to_dimacs()}});
  return Json{{"meta_vars", std::move(vars)}};
}

inline Json to_json(const CcnfReport& r) {
  return Json{{"nodes", r.nodes},
              {"girth", r.girth ? Json(*r.girth) : Json(nullptr)},
              {"k", r.k},
              {"moore_bound", r.moore_bound},
              {"condition_a", r.condition_a},
              {"required_s4", r.required_s4},
              {"cycles", r.cycle_count},
              {"min_s4_on_cycle", r.min_s4_on_cycle},
              {"cycles_below_requirement", r.cycles_below_requirement},
              {"condition_b", r.condition_b},
              {"density_feasible", r.density_feasible},
              {"passed", r.passed}};
}

inline std::string format_fixed(double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

inline Json to_json(const GrowthReport& r) {
  Json inst{{"graph", r.instance.graph}, {"ad_hoc", r.instance.ad_hoc}};
  inst["k"] = r.instance.k ? Json(*r.instance.k) : Json(nullptr);
  inst["c0"] = r.instance.c0 ? Json(r.instance.c0->to_string()) : Json(nullptr);
  inst["kinds"] = r.instance.kinds;
  inst["seed"] = r.instance.seed ? Json(*r.instance.seed) : Json(nullptr);
  Json j{{"instance", std::move(inst)},
         {"input_size", r.input_size},
         {"per_round_new", r.per_round_new},
         {"total_consequents", r.total_consequents},
         {"ratio", format_fixed(r.ratio)},
         {"rounds", r.rounds},
         {"truncated", r.truncated},
         {"empty_clause_found", r.empty_clause_found}};
  if (r.predicted_ratio) {
    j["predicted_ratio"] = r.predicted_ratio->to_string();
    j["predicted_ratio_value"] = format_fixed(static_cast<double>(r.predicted_ratio->value));
  } else {
    j["predicted_ratio"] = nullptr;
    j["predicted_ratio_value"] = nullptr;
  }
  return j;
}

inline std::string growth_csv_header() {
  return "instance,input_size,consequents,ratio,rounds,truncated,predicted_ratio";
}

inline std::string to_csv(const GrowthReport& r) {
  return r.instance.to_string() + "," + std::to_string(r.input_size) + "," + std::to_string(r.total_consequents) +
         "," + format_fixed(r.ratio) + "," + std::to_string(r.rounds) + "," + (r.truncated ? "true" : "false") +
         "," + (r.predicted_ratio ? format_fixed(static_cast<double>(r.predicted_ratio->value)) : "");
}

// ---- generation spec -------------------------------------------------------

/// {"graph": name | {"nodes", "min_girth", "seed"}, "kinds": "all-s4" |
///  "all-s3" | ["s3"|"s4", ...], "c0": rational, "polarity_seed": s}
struct GenSpec {
  std::variant<std::string, graphs::RandomCubicSpec> graph = std::string("petersen");
  std::variant<std::string, std::vector<GadgetKind>> kinds = std::string("all-s4");
  Rational c0{2};
  std::optional<std::uint64_t> polarity_seed;
};

namespace detail {

inline GadgetKind parse_kind(const std::string& s) {
  if (s == "s3" || s == "S3") return GadgetKind::S3;
  if (s == "s4" || s == "S4") return GadgetKind::S4;
  throw Error("unknown gadget kind '" + s + "'");
}

inline Rational json_rational(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number()) return Rational::parse(j.dump());
  throw Error("c0 must be a number or a string like \"3/2\"");
}

}  // namespace detail

inline std::variant<std::string, graphs::RandomCubicSpec> parse_graph_spec(const Json& g) {
  if (g.is_string()) return g.get<std::string>();
  if (!g.is_object()) throw Error("graph must be a name or {\"nodes\", \"min_girth\", \"seed\"}");
  graphs::RandomCubicSpec r;
  r.nodes = g.at("nodes").get<std::size_t>();
  r.min_girth = g.value("min_girth", std::size_t{3});
  r.seed = g.value("seed", std::uint64_t{0});
  return r;
}

inline GenSpec parse_gen_spec(const Json& j) {
  GenSpec s;
  if (j.contains("graph")) s.graph = parse_graph_spec(j["graph"]);
  if (j.contains("kinds")) {
    const Json& k = j["kinds"];
    if (k.is_string()) {
      s.kinds = k.get<std::string>();
    } else if (k.is_array()) {
      std::vector<GadgetKind> v;
      for (const Json& e : k) v.push_back(detail::parse_kind(e.get<std::string>()));
      s.kinds = std::move(v);
    } else {
      throw Error("kinds must be \"all-s4\", \"all-s3\" or a per-node array");
    }
  }
  if (j.contains("c0")) s.c0 = detail::json_rational(j["c0"]);
  if (j.contains("polarity_seed") && !j["polarity_seed"].is_null())
    s.polarity_seed = j["polarity_seed"].get<std::uint64_t>();
  return s;
}

struct GeneratedInstance {
  CubicGraph graph;
  CcnfSpec spec;
  GadgetGraph gadgets;
  Formula formula;
  CcnfReport report;
  std::string kinds_label;
};

inline GeneratedInstance generate(const GenSpec& gs) {
  GeneratedInstance out;
  if (const auto* name = std::get_if<std::string>(&gs.graph)) {
    auto g = graphs::by_name(*name);
    if (!g) throw GraphError("unknown graph '" + *name + "'");
    out.graph = std::move(*g);
  } else {
    out.graph = graphs::random_cubic(std::get<graphs::RandomCubicSpec>(gs.graph));
  }
  const auto gi = girth(out.graph);
  if (!gi) throw GraphError("graph has no cycle");
  if (*gi % 2 == 0) throw GraphError("graph " + out.graph.name() + " has even girth " + std::to_string(*gi));
  const auto k = static_cast<unsigned>((*gi - 1) / 2);

  if (const auto* label = std::get_if<std::string>(&gs.kinds)) {
    if (*label != "all-s4" && *label != "all-s3") throw Error("unknown kinds '" + *label + "'");
    out.spec = CcnfSpec::uniform(out.graph, k, gs.c0, *label == "all-s4" ? GadgetKind::S4 : GadgetKind::S3);
    out.kinds_label = *label;
  } else {
    out.spec = CcnfSpec::uniform(out.graph, k, gs.c0, GadgetKind::S4);
    out.spec.kinds = std::get<std::vector<GadgetKind>>(gs.kinds);
    out.kinds_label = "custom";
  }
  if (gs.polarity_seed) out.spec.endpoint_positive = random_polarities(out.graph, *gs.polarity_seed);
  out.gadgets = build_gadget_graph(out.graph, out.spec);
  out.formula = assemble_ccnf(out.gadgets);
  out.report = check_ccnf_conditions(out.graph, out.spec);
  return out;
}

/// Node/edge/variable correspondence plus the condition report.
inline Json gen_sidecar(const GeneratedInstance& g, const GenSpec& gs) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < g.gadgets.nodes.size(); ++i) {
    const GadgetNode& n = g.gadgets.nodes[i];
    Json vars = Json::array();
    for (auto e : n.role_edges) vars.push_back(g.gadgets.edges[e].var.id);
    nodes.push_back({{"id", i},
                     {"kind", to_string(n.kind)},
                     {"edges", n.role_edges},
                     {"vars", std::move(vars)},
                     {"positive", n.role_positive}});
  }
  Json edges = Json::array();
  for (std::size_t i = 0; i < g.gadgets.edges.size(); ++i) {
    const GadgetEdge& e = g.gadgets.edges[i];
    edges.push_back({{"id", i}, {"u", e.u}, {"v", e.v}, {"var", e.var.id}, {"positive", e.positive}});
  }
  Json seed = nullptr;
  if (const auto* r = std::get_if<graphs::RandomCubicSpec>(&gs.graph)) seed = r->seed;
  return Json{{"graph", g.graph.name()},
              {"graph_seed", seed},
              {"k", g.spec.k},
              {"c0", g.spec.c0.to_string()},
              {"girth", g.gadgets.girth},
              {"kinds", g.kinds_label},
              {"polarity_seed", gs.polarity_seed ? Json(*gs.polarity_seed) : Json(nullptr)},
              {"nodes", std::move(nodes)},
              {"edges", std::move(edges)},
              {"conditions", to_json(g.report)}};
}

/// Instance descriptor recovered from a generation sidecar.
inline InstanceDescriptor descriptor_from_sidecar(const Json& j) {
  InstanceDescriptor d;
  d.ad_hoc = false;
  d.graph = j.value("graph", std::string("unknown"));
  if (j.contains("k") && j["k"].is_number_unsigned()) d.k = j["k"].get<unsigned>();
  if (j.contains("c0") && !j["c0"].is_null()) d.c0 = detail::json_rational(j["c0"]);
  d.kinds = j.value("kinds", std::string());
  if (j.contains("graph_seed") && j["graph_seed"].is_number_unsigned())
    d.seed = j["graph_seed"].get<std::uint64_t>();
  else if (j.contains("polarity_seed") && j["polarity_seed"].is_number_unsigned())
    d.seed = j["polarity_seed"].get<std::uint64_t>();
  return d;
}

}  // namespace rescnf
