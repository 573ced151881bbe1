#include "brooks/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "brooks/checking.hpp"
#include "brooks/chooser.hpp"
#include "brooks/formats.hpp"
#include "brooks/fuzz.hpp"
#include "brooks/instances.hpp"

namespace brooks {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph load_graph(const std::string& path) {
  try {
    return parse_graph(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const GraphError& e) {
    throw InputError(path + ": " + e.what());
  }
}

ListAssignment load_lists(const std::string& path, std::size_t n) {
  try {
    return parse_lists(read_file(path), n);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << text;
}

std::string one_based(const VertexSubset& vs) {
  std::string s;
  for (Vertex v : vs) s += (s.empty() ? "" : " ") + std::to_string(v + 1);
  return s;
}

void print_counters(const TraceCounters& counters, std::ostream& os) {
  for (const auto& [name, value] : counters.entries()) os << name << '=' << value << '\n';
}

struct Options {
  std::string graph, lists, coloring, out_path;
  bool trace = false;
  std::uint64_t node_limit = kDefaultNodeLimit;
  std::string kind;
  std::size_t n = 0, d = 0, dmax = 0, size = 0, palette = 0, nmax = 60, oracle_nmax = 9;
  std::uint64_t seed = 0, trials = 0;
  Fault fault = Fault::none;
};

ExitStatus cmd_color(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(o.graph);
  const ListAssignment lists = load_lists(o.lists, g.size());
  const ChooseResult result = list_color(g, lists);
  auto trace = [&] {
    if (o.trace) print_counters(result.counters, err);
  };

  if (const auto* ok = std::get_if<Success>(&result.outcome)) {
    const auto violations = verify_coloring(g, lists, ok->coloring);
    if (!violations.empty()) {
      err << "status=internal-error\nreason=output failed verification: " << describe(violations.front()) << '\n';
      return ExitStatus::internal_failure;
    }
    err << "status=success\n";
    trace();
    out << emit_coloring(ok->coloring);
    return ExitStatus::ok;
  }
  if (const auto* bad = std::get_if<Infeasible>(&result.outcome)) {
    err << "status=infeasible\nreason=" << bad->witness << "\ncomponent=" << one_based(bad->component) << '\n';
    trace();
    return ExitStatus::infeasible;
  }
  const auto& na = std::get<NotApplicable>(result.outcome);
  err << "status=not-applicable\nreason=" << to_string(na.reason) << "\ncomponent=" << one_based(na.component) << '\n';
  trace();
  return ExitStatus::not_applicable;
}

ExitStatus cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(o.graph);
  const ListAssignment lists = load_lists(o.lists, g.size());
  PartialColoring f;
  try {
    f = parse_coloring(read_file(o.coloring), g.size());
  } catch (const ParseError& e) {
    throw InputError(o.coloring + ": " + e.what());
  }
  const auto violations = verify_coloring(g, lists, f);
  err << (violations.empty() ? "status=clean\n" : "status=violations\n");
  for (const auto& v : violations) out << describe(v) << '\n';
  return violations.empty() ? ExitStatus::ok : ExitStatus::infeasible;
}

ExitStatus cmd_oracle(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(o.graph);
  const ListAssignment lists = load_lists(o.lists, g.size());
  const ExactResult r = solve_exact(g, lists, o.node_limit);
  switch (r.status) {
    case ExactStatus::found:
      err << "status=found\nnodes=" << r.nodes << '\n';
      out << emit_coloring(r.coloring);
      return ExitStatus::ok;
    case ExactStatus::infeasible:
      err << "status=infeasible\nnodes=" << r.nodes << '\n';
      return ExitStatus::infeasible;
    case ExactStatus::limit_exceeded:
      err << "status=limit-exceeded\nnodes=" << r.nodes << '\n';
      return ExitStatus::not_applicable;
  }
  return ExitStatus::internal_failure;
}

ExitStatus cmd_gen_graph(const Options& o, std::ostream& out, std::ostream& err) {
  Graph g;
  try {
    if (o.kind == "regular") g = gen_random_regular(o.n, o.d, o.seed);
    else if (o.kind == "connected") g = gen_random_connected(o.n, o.dmax, o.seed);
    else g = gen_named(parse_named_kind(o.kind), o.n);
  } catch (const GeneratorError& e) {
    throw InputError(e.what());
  }
  write_output(emit_graph(g), o.out_path, out);
  err << "status=ok\n";
  return ExitStatus::ok;
}

ExitStatus cmd_gen_lists(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(o.graph);
  ListAssignment lists;
  try {
    lists = gen_lists(g, o.size, o.palette, o.seed);
  } catch (const GeneratorError& e) {
    throw InputError(e.what());
  }
  write_output(emit_lists(lists), o.out_path, out);
  err << "status=ok\n";
  return ExitStatus::ok;
}

ExitStatus cmd_fuzz(const Options& o, std::ostream& out, std::ostream& err) {
  const FuzzReport report = run_fuzz({o.trials, o.seed, o.nmax, o.oracle_nmax, o.fault});
  err << (report.passed() ? "status=passed\n" : "status=failed\n");
  for (const auto& f : report.failures) {
    err << "failure trial=" << f.trial << " seed=" << o.seed << " trial_seed=" << f.trial_seed
        << " reason=" << f.reason << '\n';
  }
  if (report.failure_count == 0 && !report.counters.all_positive()) {
    for (const auto& [name, value] : report.counters.entries()) {
      if (value == 0) err << "uncovered branch=" << name << '\n';
    }
  }
  out << "trials=" << report.trials << "\nsuccess=" << report.successes << "\ninfeasible=" << report.infeasible
      << "\nnot_applicable=" << report.not_applicable << "\noracle_checked=" << report.oracle_checked
      << "\noracle_infeasible=" << report.oracle_infeasible << "\nfailures=" << report.failure_count << '\n';
  print_counters(report.counters, out);
  return report.passed() ? ExitStatus::ok : ExitStatus::internal_failure;
}

}  // namespace

ExitStatus run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"List coloring of graphs from lists of max-degree size", "brooks"};
  app.require_subcommand(1);
  Options o;

  auto* color = app.add_subcommand("color", "Color a graph from its lists");
  color->add_option("graph", o.graph, "Graph file")->required();
  color->add_option("lists", o.lists, "Lists file")->required();
  color->add_flag("--trace", o.trace, "Print branch counters to stderr");

  auto* verify = app.add_subcommand("verify", "Check a coloring against a graph and its lists");
  verify->add_option("graph", o.graph, "Graph file")->required();
  verify->add_option("lists", o.lists, "Lists file")->required();
  verify->add_option("coloring", o.coloring, "Coloring file")->required();

  auto* oracle = app.add_subcommand("oracle", "Exhaustive search for a list coloring");
  oracle->add_option("graph", o.graph, "Graph file")->required();
  oracle->add_option("lists", o.lists, "Lists file")->required();
  oracle->add_option("--node-limit", o.node_limit, "Search node budget")->capture_default_str();

  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->require_subcommand(1);
  auto* gen_graph = gen->add_subcommand("graph", "Generate a graph");
  gen_graph->add_option("--kind", o.kind, "cycle|path|complete|petersen|prism|regular|connected")->required();
  gen_graph->add_option("--n", o.n, "Vertex count (ring length for prism)");
  gen_graph->add_option("--d", o.d, "Degree for --kind regular");
  gen_graph->add_option("--dmax", o.dmax, "Degree cap for --kind connected");
  gen_graph->add_option("--seed", o.seed, "Random seed")->required();
  gen_graph->add_option("--out", o.out_path, "Output file (default stdout)");
  auto* gen_lists_cmd = gen->add_subcommand("lists", "Generate a list assignment");
  gen_lists_cmd->add_option("--graph", o.graph, "Graph file")->required();
  gen_lists_cmd->add_option("--size", o.size, "List size")->required();
  gen_lists_cmd->add_option("--palette", o.palette, "Colors are drawn from 1..palette")->required();
  gen_lists_cmd->add_option("--seed", o.seed, "Random seed")->required();
  gen_lists_cmd->add_option("--out", o.out_path, "Output file (default stdout)");

  auto* fuzz = app.add_subcommand("fuzz", "Randomized conformance run");
  fuzz->add_option("--trials", o.trials, "Number of instances")->required();
  fuzz->add_option("--seed", o.seed, "Run seed")->required();
  fuzz->add_option("--nmax", o.nmax, "Largest instance size")->capture_default_str();
  fuzz->add_option("--oracle-nmax", o.oracle_nmax, "Largest instance cross-checked by the oracle")
      ->capture_default_str();
  const std::map<std::string, Fault> faults{{"none", Fault::none}, {"eq1-case-c", Fault::eq1_case_c_smallest}};
  fuzz->add_option("--fault", o.fault, "Inject a defect to test the harness")
      ->transform(CLI::CheckedTransformer(faults, CLI::ignore_case))
      ->group("Harness validation");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ExitStatus::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ExitStatus::ok;
  } catch (const CLI::ParseError& e) {
    err << "status=usage-error\n" << e.what() << '\n';
    return ExitStatus::usage_or_io;
  }

  try {
    if (color->parsed()) return cmd_color(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (oracle->parsed()) return cmd_oracle(o, out, err);
    if (gen_graph->parsed()) return cmd_gen_graph(o, out, err);
    if (gen_lists_cmd->parsed()) return cmd_gen_lists(o, out, err);
    if (fuzz->parsed()) return cmd_fuzz(o, out, err);
  } catch (const InputError& e) {
    err << "status=input-error\n" << e.what() << '\n';
    return ExitStatus::usage_or_io;
  } catch (const InvariantError& e) {
    err << "status=internal-error\n" << e.what() << '\n';
    return ExitStatus::internal_failure;
  } catch (const std::exception& e) {
    err << "status=internal-error\n" << e.what() << '\n';
    return ExitStatus::internal_failure;
  }
  err << "status=usage-error\nno command\n";
  return ExitStatus::usage_or_io;
}

}  // namespace brooks
