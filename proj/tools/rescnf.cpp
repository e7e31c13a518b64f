// rescnf: command-line frontend for the rescnf library.
//
// Machine-readable output goes to --output (default stdout); human-readable
// summaries go to stderr. `solve` exits 10 for SAT and 20 for UNSAT; every
// subcommand exits 1 on error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rescnf/rescnf.hpp"
#include "rescnf/serialize.hpp"

namespace {

using namespace rescnf;

constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;
constexpr int kExitError = 1;

struct RunConfig {
  std::string input = "-";
  std::string output = "-";
  std::string format;  // empty: subcommand default
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> budget_clauses;
  std::optional<std::size_t> budget_rounds;
  bool verbose = false;

  std::string engine = "brute";
  std::string mode;
  std::string sidecar;
  std::string graph = "petersen";
  std::string kinds = "all-s4";
  std::string c0 = "2";
  std::optional<std::uint64_t> polarity_seed;
  std::string spec_file;

  Budget budget() const {
    Budget b;
    if (budget_clauses) b.max_clauses = *budget_clauses;
    if (budget_rounds) b.max_rounds = *budget_rounds;
    return b;
  }
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_all(const std::string& path, const std::string& data) {
  if (path == "-") {
    std::cout << data;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << data;
}

Formula read_formula(const RunConfig& cfg) { return parse_dimacs(read_all(cfg.input)); }

std::string resolve_format(const RunConfig& cfg, const std::string& subcommand, std::initializer_list<const char*> allowed) {
  if (cfg.format.empty()) return *allowed.begin();
  for (const char* a : allowed)
    if (cfg.format == a) return cfg.format;
  throw UsageError("--format " + cfg.format + " is not supported by '" + subcommand + "'");
}

std::string model_line(const Assignment& a) {
  std::string s = "v";
  for (int l : a.to_dimacs()) s += " " + std::to_string(l);
  return s + " 0\n";
}

int cmd_solve(const RunConfig& cfg) {
  const std::string fmt = resolve_format(cfg, "solve", {"dimacs", "json"});
  const Formula f = read_formula(cfg);
  std::optional<Verdict> verdict;
  std::optional<Assignment> witness;
  Json extra = Json::object();

  if (cfg.engine == "brute") {
    BruteForceResult r = brute_force_sat(f);
    verdict = r.verdict;
    witness = r.witness;
  } else if (cfg.engine == "horn") {
    HornResult r = horn_sat(f);
    verdict = r.verdict;
    if (r.verdict == Verdict::Sat) witness = r.model;
  } else if (cfg.engine == "saturate") {
    if (f.empty()) {
      verdict = Verdict::Sat;
    } else {
      SaturationResult s = saturate(f, cfg.budget(), SaturateOptions{false});
      if (s.empty_clause_found)
        verdict = Verdict::Unsat;
      else if (!s.truncated)
        verdict = Verdict::Sat;
      extra["derived"] = s.derived.size();
      extra["rounds"] = s.rounds;
      extra["truncated"] = s.truncated;
      std::cerr << "c saturation: " << s.derived.size() << " clauses, " << s.rounds << " rounds"
                << (s.truncated ? ", truncated" : "") << "\n";
    }
  } else {
    throw UsageError("unknown engine '" + cfg.engine + "' (brute, horn, saturate)");
  }

  const char* status = !verdict ? "UNKNOWN" : *verdict == Verdict::Sat ? "SATISFIABLE" : "UNSATISFIABLE";
  std::string out;
  if (fmt == "json") {
    Json j{{"engine", cfg.engine}, {"result", !verdict ? "UNKNOWN" : to_string(*verdict)}};
    j["model"] = witness ? Json(witness->to_dimacs()) : Json(nullptr);
    for (auto& [k, v] : extra.items()) j[k] = v;
    out = j.dump() + "\n";
  } else {
    out = std::string("s ") + status + "\n";
    if (witness) out += model_line(*witness);
  }
  write_all(cfg.output, out);
  if (!verdict) return 0;
  return *verdict == Verdict::Sat ? kExitSat : kExitUnsat;
}

int cmd_reduce(const RunConfig& cfg) {
  const std::string fmt = resolve_format(cfg, "reduce", {"dimacs", "json"});
  const Formula f = read_formula(cfg);
  Formula reduced;
  std::optional<Json> meta;
  Json summary{{"mode", cfg.mode},
               {"input", {{"variables", f.variable_count}, {"clauses", f.clauses.size()}}}};

  if (cfg.mode == "horn3") {
    reduced = split_horn3(f);
    summary["fresh_variables"] = reduced.variable_count - f.variable_count;
  } else if (cfg.mode == "horn-rcnf") {
    MetaFormula m = horn_to_rcnf(f);
    reduced = std::move(m.formula);
    meta = meta_sidecar(m.table);
  } else if (cfg.mode == "rcnf-closure") {
    if (f.empty()) throw Error("rcnf-closure needs at least one clause");
    RcnfEncoding enc = rcnf_of(f, cfg.budget());
    reduced = std::move(enc.formula);
    meta = meta_sidecar(enc.meta_variable_of);
    summary["truncated"] = enc.truncated;
    summary["steps"] = enc.step_count;
  } else {
    throw UsageError("unknown or missing --mode (horn3, horn-rcnf, rcnf-closure)");
  }
  summary["output"] = {{"variables", reduced.variable_count}, {"clauses", reduced.clauses.size()}};

  std::cerr << "c reduce " << cfg.mode << ": " << f.variable_count << " vars, " << f.clauses.size() << " clauses -> "
            << reduced.variable_count << " vars, " << reduced.clauses.size() << " clauses";
  if (summary.contains("fresh_variables")) std::cerr << ", " << summary["fresh_variables"].get<std::uint32_t>() << " fresh";
  if (summary.contains("truncated")) std::cerr << ", truncated=" << (summary["truncated"].get<bool>() ? "true" : "false");
  std::cerr << "\n";

  if (!cfg.sidecar.empty() && meta) write_all(cfg.sidecar, meta->dump(2) + "\n");
  if (fmt == "json") {
    if (meta) summary["meta_vars"] = (*meta)["meta_vars"];
    write_all(cfg.output, summary.dump() + "\n");
  } else {
    write_all(cfg.output, emit_dimacs(reduced));
  }
  return 0;
}

GenSpec gen_spec_from(const RunConfig& cfg) {
  GenSpec gs;
  if (!cfg.spec_file.empty()) {
    const bool inline_json = cfg.spec_file.front() == '{';
    return parse_gen_spec(Json::parse(inline_json ? cfg.spec_file : read_all(cfg.spec_file)));
  }
  if (!cfg.graph.empty() && cfg.graph.front() == '{')
    gs.graph = parse_graph_spec(Json::parse(cfg.graph));
  else
    gs.graph = cfg.graph;
  if (cfg.kinds == "all-s4" || cfg.kinds == "all-s3") {
    gs.kinds = cfg.kinds;
  } else {
    std::vector<GadgetKind> kinds;
    std::stringstream ss(cfg.kinds);
    for (std::string tok; std::getline(ss, tok, ',');) kinds.push_back(detail::parse_kind(tok));
    gs.kinds = std::move(kinds);
  }
  gs.c0 = Rational::parse(cfg.c0);
  gs.polarity_seed = cfg.polarity_seed ? cfg.polarity_seed : cfg.seed;
  return gs;
}

int cmd_gen(const RunConfig& cfg) {
  const std::string fmt = resolve_format(cfg, "gen", {"dimacs", "json"});
  const GenSpec gs = gen_spec_from(cfg);
  GeneratedInstance g = generate(gs);
  const Json sidecar = gen_sidecar(g, gs);
  const CcnfReport& r = g.report;

  std::cerr << "c graph " << g.graph.name() << ": " << r.nodes << " nodes, girth " << (r.girth ? *r.girth : 0)
            << ", k=" << r.k << "\n"
            << "c condition (a) moore bound " << r.moore_bound << ": " << (r.condition_a ? "pass" : "fail") << "\n"
            << "c condition (b) " << r.cycle_count << " cycles, min S4 " << r.min_s4_on_cycle << ", required "
            << r.required_s4 << ": " << (r.condition_b ? "pass" : "fail") << "\n"
            << "c ccnf conditions: " << (r.passed ? "pass" : "fail") << "\n";

  if (!cfg.sidecar.empty()) write_all(cfg.sidecar, sidecar.dump(2) + "\n");
  if (fmt == "json") {
    write_all(cfg.output, sidecar.dump() + "\n");
  } else {
    g.formula.comments = {"ccnf graph=" + g.graph.name() + " k=" + std::to_string(g.spec.k) +
                          " c0=" + g.spec.c0.to_string() + " kinds=" + g.kinds_label};
    write_all(cfg.output, emit_dimacs(g.formula));
  }
  return 0;
}

int cmd_measure(const RunConfig& cfg) {
  const std::string fmt = resolve_format(cfg, "measure", {"csv", "json"});
  const Formula f = read_formula(cfg);
  InstanceDescriptor d;
  if (!cfg.sidecar.empty()) d = descriptor_from_sidecar(Json::parse(read_all(cfg.sidecar)));
  GrowthReport r = measure_growth(f, cfg.budget(), d);
  std::cerr << "c measured ratio " << format_fixed(r.ratio);
  if (r.predicted_ratio) std::cerr << ", predicted ratio " << r.predicted_ratio->to_string();
  std::cerr << (r.truncated ? " (truncated)" : "") << "\n";
  write_all(cfg.output, fmt == "json" ? to_json(r).dump() + "\n" : to_csv(r) + "\n");
  return 0;
}

int cmd_validate(const RunConfig& cfg) {
  const std::string fmt = resolve_format(cfg, "validate", {"json", "dimacs"});
  const Formula f = read_formula(cfg);
  if (fmt == "dimacs") {
    write_all(cfg.output, emit_dimacs(f));
    return 0;
  }
  std::size_t counts[4] = {0, 0, 0, 0};
  std::size_t tautologies = 0, empty = 0, max_width = 0;
  for (const Clause& c : f.clauses) {
    ++counts[static_cast<int>(classify(c))];
    tautologies += is_tautology(c);
    empty += c.empty();
    max_width = std::max(max_width, c.size());
  }
  Json j{{"variables", f.variable_count},
         {"clauses", f.clauses.size()},
         {"horn", is_horn(f)},
         {"kinds",
          {{"positive-unit", counts[0]}, {"definite", counts[1]}, {"goal", counts[2]}, {"non-horn", counts[3]}}},
         {"tautologies", tautologies},
         {"empty_clauses", empty},
         {"max_width", max_width}};
  write_all(cfg.output, j.dump() + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Resolution, Horn and simplex-gadget CNF toolkit"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  app.add_option("-i,--input", cfg.input, "DIMACS input file, - for stdin");
  app.add_option("-o,--output", cfg.output, "Output file, - for stdout");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"dimacs", "json", "csv"}));
  app.add_option("--seed", cfg.seed, "Seed for randomized choices");
  app.add_option("--budget-clauses", cfg.budget_clauses, "Saturation clause budget")->check(CLI::PositiveNumber);
  app.add_option("--budget-rounds", cfg.budget_rounds, "Saturation round budget")->check(CLI::PositiveNumber);
  app.add_flag("-v,--verbose", cfg.verbose, "Extra diagnostics on stderr");

  auto* solve = app.add_subcommand("solve", "Decide satisfiability");
  solve->add_option("--engine", cfg.engine, "brute, horn or saturate")
      ->check(CLI::IsMember({"brute", "horn", "saturate"}));

  auto* reduce = app.add_subcommand("reduce", "Apply a reduction");
  reduce->add_option("--mode", cfg.mode, "horn3, horn-rcnf or rcnf-closure")
      ->required()
      ->check(CLI::IsMember({"horn3", "horn-rcnf", "rcnf-closure"}));
  reduce->add_option("--sidecar", cfg.sidecar, "Write the meta-variable map as JSON");

  auto* gen = app.add_subcommand("gen", "Generate a simplex-gadget CCNF instance");
  gen->add_option("--graph", cfg.graph, "k4, petersen, heawood, mcgee or a JSON random spec");
  gen->add_option("--kinds", cfg.kinds, "all-s4, all-s3 or a comma list of s3/s4 per node");
  gen->add_option("--c0", cfg.c0, "Density constant, e.g. 2 or 3/2");
  gen->add_option("--polarity-seed", cfg.polarity_seed, "Randomize role polarities");
  gen->add_option("--spec", cfg.spec_file, "JSON generation spec, inline or a file (overrides the flags above)");
  gen->add_option("--sidecar", cfg.sidecar, "Write node/edge/variable correspondence as JSON");

  auto* measure = app.add_subcommand("measure", "Measure saturation growth");
  measure->add_option("--sidecar", cfg.sidecar, "Generation sidecar describing the instance");

  auto* validate = app.add_subcommand("validate", "Check and summarize a DIMACS file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (cfg.verbose) std::cerr << "c rescnf " << app.get_subcommands().front()->get_name() << "\n";
    if (solve->parsed()) return cmd_solve(cfg);
    if (reduce->parsed()) return cmd_reduce(cfg);
    if (gen->parsed()) return cmd_gen(cfg);
    if (measure->parsed()) return cmd_measure(cfg);
    if (validate->parsed()) return cmd_validate(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
