#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "resil/errors.hpp"
#include "resil/gadgets.hpp"
#include "resil/reductions.hpp"
#include "resil/resilience.hpp"

namespace resil::cli {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& data, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << data;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << data)) throw IoError("cannot write '" + path + "'");
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string edge_list(const EdgeSet& edges) {
  std::string s;
  for (const Edge& e : edges) {
    if (!s.empty()) s += ',';
    s += std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1);
  }
  return s;
}

std::string restriction_list(const Restriction& r) {
  std::string s;
  for (const auto& fix : r.fixes) {
    if (!s.empty()) s += ',';
    s += "x" + std::to_string(fix.var) + ":=" + yes_no(fix.value);
  }
  return s;
}

std::string max_string(const MaxResilience& m) {
  if (std::holds_alternative<Saturated>(m)) return "saturated";
  return std::to_string(std::get<std::int64_t>(m));
}

struct Options {
  int threads = 0;
  std::string input;
  std::string output;
  std::string sidecar;
  int k = 0;
  std::int64_t r = -1;
  std::int32_t s = 0;
  bool max = false;
  std::string mode;
  std::string kind;
  std::string emit;
  std::vector<long long> params;
};

int cmd_color(const Options& o, std::ostream& out) {
  const Graph g = parse_graph(read_input(o.input));
  out << "command=color\ninput=" << o.input << "\nk=" << o.k << "\nvertices=" << g.num_vertices()
      << "\nedges=" << g.num_edges() << "\n";
  auto c = is_k_colorable(g, o.k);
  out << "colorable=" << yes_no(c.has_value()) << "\n";
  if (!c) {
    out << "result=not " << o.k << "-colorable\n";
    return kNegative;
  }
  out << "coloring=";
  for (std::size_t v = 0; v < c->colors.size(); ++v) out << (v ? "," : "") << int(c->colors[v]);
  out << "\n";
  return kOk;
}

int cmd_resilience(const Options& o, std::ostream& out) {
  ScanOptions scan{o.threads};
  const std::string text = read_input(o.input);
  out << "command=resilience\nmode=" << o.mode << "\ninput=" << o.input << "\n";
  if (o.mode == "graph") {
    if (o.k <= 0) throw PreconditionError("graph mode requires --k");
    const Graph g = parse_graph(text);
    out << "k=" << o.k << "\n";
    if (o.max) {
      try {
        out << "max_resilience=" << max_string(max_graph_resilience(g, o.k, scan)) << "\n";
        return kOk;
      } catch (const DomainError& e) {
        out << "max_resilience=none\nresult=" << e.what() << "\n";
        return kNegative;
      }
    }
    const auto v = is_r_resiliently_k_colorable(g, o.r, o.k, scan);
    out << "r=" << v.r_requested << "\nr_tested=" << v.r_tested << "\nsaturated=" << yes_no(v.capped())
        << "\nresilient=" << yes_no(v.resilient) << "\n";
    if (v.witness) out << "witness=" << edge_list(*v.witness) << "\n";
    out << "subsets_checked=" << v.subsets_checked << "\n";
    return v.resilient ? kOk : kNegative;
  }
  const CnfFormula f = parse_cnf(text);
  if (o.max) {
    try {
      out << "max_resilience=" << max_string(max_sat_resilience(f, scan)) << "\n";
      return kOk;
    } catch (const DomainError& e) {
      out << "max_resilience=none\nresult=" << e.what() << "\n";
      return kNegative;
    }
  }
  if (o.r > std::numeric_limits<std::int32_t>::max()) throw PreconditionError("r too large");
  const auto v = is_r_resilient(f, static_cast<std::int32_t>(o.r), scan);
  out << "r=" << v.r_requested << "\nr_tested=" << v.r_tested << "\nsaturated=" << yes_no(v.capped())
      << "\nresilient=" << yes_no(v.resilient) << "\n";
  if (v.witness) out << "witness=" << restriction_list(*v.witness) << "\n";
  out << "restrictions_checked=" << v.restrictions_checked << "\n";
  return v.resilient ? kOk : kNegative;
}

void describe(const CnfFormula& f, std::ostream& out) {
  out << "num_vars=" << f.num_vars() << "\nnum_clauses=" << f.num_clauses() << "\nwidth=" << f.width() << "\n";
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const CnfFormula f = parse_cnf(read_input(o.input));
  const Budget budget = Budget::from_env();
  const bool to_stdout = o.output.empty() || o.output == "-";
  std::ostringstream report;
  report << "command=reduce\nkind=" << o.kind << "\ninput=" << o.input << "\n";
  if (o.kind == "to-coloring") {
    if (to_stdout) throw PreconditionError("to-coloring needs --output for the graph and its sidecar");
    const GadgetGraph gg = six_cnf_to_graph(f, budget);
    const std::string sidecar = o.sidecar.empty() ? o.output + ".json" : o.sidecar;
    write_output(o.output, serialize_graph(gg.graph), out);
    write_output(sidecar, provenance_to_json(gg), out);
    report << "output=" << o.output << "\nsidecar=" << sidecar << "\nvertices=" << gg.graph.num_vertices()
           << "\nedges=" << gg.graph.num_edges() << "\n";
    out << report.str();
    return kOk;
  }
  CnfFormula result;
  if (o.kind == "blowup") {
    if (o.s < 1) throw PreconditionError("blowup requires --s >= 1");
    result = blow_up(f, o.s, budget);
    report << "s=" << o.s << "\n";
  } else if (o.kind == "shrink") {
    result = shrink_down(f);
  } else {
    if (o.r < 2) throw PreconditionError("chain requires --r >= 2");
    if (o.r > 62) throw PreconditionError("chain --r too large");
    result = hardness_chain(static_cast<std::int32_t>(o.r), f, budget);
    report << "r=" << o.r << "\n";
  }
  write_output(o.output, serialize_cnf(result), out);
  if (!to_stdout) {
    report << "output=" << o.output << "\n";
    describe(result, report);
    out << report.str();
  }
  return kOk;
}

int cmd_classics(const Options& o, std::ostream& out) {
  if (!o.emit.empty()) {
    write_output(o.output, serialize_graph(make_classic(o.emit, o.params)), out);
    return kOk;
  }
  struct Row {
    const char* name;
    Graph g;
    int k;
    std::int64_t expected;
    bool at_least;
  };
  const Row rows[] = {
      {"petersen", classic::petersen(), 3, 2, true}, {"durer", classic::durer(), 3, 1, false},
      {"durer", classic::durer(), 4, 4, false},      {"grotzsch", classic::grotzsch(), 4, 4, false},
      {"chvatal", classic::chvatal(), 4, 3, false},
  };
  out << "command=classics\n";
  bool all = true;
  for (const Row& row : rows) {
    const MaxResilience m = max_graph_resilience(row.g, row.k, ScanOptions{o.threads});
    const auto* value = std::get_if<std::int64_t>(&m);
    const bool match = value && (row.at_least ? *value >= row.expected : *value == row.expected);
    all = all && match;
    out << "graph=" << row.name << " k=" << row.k << " max_resilience=" << max_string(m)
        << " expected=" << (row.at_least ? ">=" : "") << row.expected << " match=" << yes_no(match) << "\n";
  }
  out << "all_match=" << yes_no(all) << "\n";
  return all ? kOk : kNegative;
}

std::string quoted(const std::string& s) {
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') q += '\\';
    q += ch;
  }
  return q + "\"";
}

int cmd_verify_gadgets(const Options& o, std::ostream& out) {
  const GadgetReport report = verify_gadget_contracts(ScanOptions{o.threads});
  out << "command=verify-gadgets\n";
  for (const auto& c : report.checks) {
    out << "gadget=" << c.gadget << " contract=" << c.contract << " ok=" << yes_no(c.ok)
        << " detail=" << quoted(c.detail) << "\n";
  }
  out << "all_ok=" << yes_no(report.ok()) << "\n";
  return report.ok() ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Resilient coloring and satisfiability toolkit", "resil"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--threads", o.threads, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);

  auto* color = app.add_subcommand("color", "exact k-coloring of a DIMACS graph");
  color->add_option("file", o.input, "DIMACS edge file, - for stdin")->required();
  color->add_option("--k", o.k, "palette size")->required()->check(CLI::Range(1, kMaxColors));

  auto* resilience = app.add_subcommand("resilience", "r-resilience of a graph or formula");
  resilience->add_option("file", o.input, "DIMACS file, - for stdin")->required();
  resilience->add_option("--mode", o.mode)->required()->check(CLI::IsMember({"graph", "sat"}));
  auto* r_opt = resilience->add_option("--r", o.r, "number of added edges or fixed variables")
                    ->check(CLI::NonNegativeNumber);
  auto* max_opt = resilience->add_flag("--max", o.max, "largest r instead of a single check");
  r_opt->excludes(max_opt);
  resilience->add_option("--k", o.k, "palette size (graph mode)")->check(CLI::Range(1, kMaxColors));

  auto* reduce = app.add_subcommand("reduce", "resilience-preserving reductions");
  reduce->add_option("file", o.input, "DIMACS CNF file, - for stdin")->required();
  reduce->add_option("--kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"blowup", "shrink", "chain", "to-coloring"}));
  reduce->add_option("--s", o.s, "copies for blowup");
  reduce->add_option("--r", o.r, "target resilience for chain");
  reduce->add_option("-o,--output", o.output, "output file (default stdout)");
  reduce->add_option("--sidecar", o.sidecar, "provenance file for to-coloring (default OUTPUT.json)");

  auto* classics = app.add_subcommand("classics", "classic-graph resilience table");
  classics->add_option("--emit", o.emit, "print a named graph as DIMACS instead");
  classics->add_option("params", o.params, "generator parameters for --emit");
  classics->add_option("-o,--output", o.output, "output file for --emit (default stdout)");

  auto* verify = app.add_subcommand("verify-gadgets", "certify the gadget library");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kInputError;
  try {
    if (*resilience && !o.max && o.r < 0) throw PreconditionError("resilience needs --r or --max");
    if (*color) code = cmd_color(o, out);
    if (*resilience) code = cmd_resilience(o, out);
    if (*reduce) code = cmd_reduce(o, out);
    if (*classics) code = cmd_classics(o, out);
    if (*verify) code = cmd_verify_gadgets(o, out);
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return kBudgetError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  err << "wall_ms=" << ms << "\n";
  return code;
}

}  // namespace resil::cli
