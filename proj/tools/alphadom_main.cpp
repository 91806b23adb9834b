#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "alphadom/alpha_mds.hpp"
#include "alphadom/error.hpp"
#include "alphadom/experiment.hpp"
#include "alphadom/graph.hpp"
#include "alphadom/oracle.hpp"
#include "alphadom/rational.hpp"

namespace {

using namespace alphadom;

// 0 success/stabilized, 1 not stabilized, 2 usage error, 3 I/O error.
int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::IoError:
    case Errc::MalformedHeader:
    case Errc::MalformedEdgeLine:
    case Errc::InvalidEndpoint:
    case Errc::SelfLoop:
    case Errc::Disconnected:
      return 3;
    default:
      return 2;
  }
}

std::vector<Alpha> parse_alpha_list(const std::vector<std::string>& tokens) {
  std::vector<Alpha> alphas;
  for (const std::string& token : tokens) {
    std::size_t start = 0;
    while (start <= token.size()) {
      const auto comma = token.find(',', start);
      const std::string part =
          token.substr(start, comma == std::string::npos ? std::string::npos
                                                         : comma - start);
      if (!part.empty()) alphas.push_back(Alpha::parse(part));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  if (alphas.empty()) throw Error(Errc::BadAlpha, "no alpha given");
  return alphas;
}

std::vector<int> parse_node_list(const std::string& text, int n) {
  std::vector<int> nodes;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto comma = text.find(',', start);
    const std::string part =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!part.empty()) {
      int v = 0;
      try {
        std::size_t pos = 0;
        v = std::stoi(part, &pos);
        if (pos != part.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw Error(Errc::BadArgument, "bad node id '" + part + "' in --set");
      }
      if (v < 0 || v >= n)
        throw Error(Errc::OutOfRange,
                    "node " + std::to_string(v) + " out of range for n=" + std::to_string(n));
      nodes.push_back(v);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return nodes;
}

std::vector<GraphSource> collect_sources(const std::vector<std::string>& graph_paths,
                                         const std::vector<std::string>& gen_tokens) {
  std::vector<GraphSource> sources;
  for (const std::string& p : graph_paths) sources.push_back(GraphSource::file(p));
  for (const std::string& t : gen_tokens) sources.push_back(parse_gen(t));
  if (sources.empty())
    throw Error(Errc::BadArgument, "need a graph: pass --graph PATH or --gen n,density");
  return sources;
}

int cmd_gen_graph(const std::string& gen_token, std::uint64_t seed,
                  const std::string& out_path) {
  const GraphSource src = parse_gen(gen_token);
  const long long max_m = static_cast<long long>(src.n) * (src.n - 1) / 2;
  const long long target = std::llround(src.density * static_cast<double>(max_m));
  if (target < src.n - 1)
    throw Error(Errc::InfeasibleDensity,
                "target m = " + std::to_string(target) + " < " + std::to_string(src.n - 1) +
                    " (spanning tree minimum for n=" + std::to_string(src.n) + ")");
  const Graph g = realize_graph(src, seed);
  g.save_file(out_path);
  return 0;
}

struct SimulateArgs {
  std::vector<std::string> graph_paths;
  std::vector<std::string> gen_tokens;
  std::vector<std::string> alpha_tokens;
  std::string daemon = "central:random";
  std::string init = "all-out";
  std::uint64_t seed = 0;
  long long max_steps = 0;
  std::string out_path;
  std::string trace_path;
  bool timing = false;
};

int cmd_simulate(const SimulateArgs& args) {
  const auto sources = collect_sources(args.graph_paths, args.gen_tokens);
  if (sources.size() != 1)
    throw Error(Errc::BadArgument, "simulate takes exactly one graph source");
  const auto alphas = parse_alpha_list(args.alpha_tokens);
  if (alphas.size() != 1)
    throw Error(Errc::BadArgument, "simulate takes exactly one alpha (use sweep for lists)");

  RunSpec spec;
  spec.source = sources.front();
  spec.alpha = alphas.front();
  spec.daemon = parse_daemon(args.daemon);
  spec.init = parse_init(args.init);
  spec.seed = args.seed;
  spec.max_steps = args.max_steps;
  spec.timing = args.timing;

  const RunOutput out = run_single(spec);
  const std::string text = csv_header() + to_csv(out.row);
  std::cout << text;
  if (!args.out_path.empty()) write_text_file(args.out_path, text);
  if (!args.trace_path.empty()) write_text_file(args.trace_path, trace_csv(out.trace));
  return out.row.stabilized ? 0 : 1;
}

struct SweepArgs {
  std::vector<std::string> graph_paths;
  std::vector<std::string> gen_tokens;
  std::vector<std::string> alpha_tokens;
  std::string daemon = "central:random";
  std::string init = "all-out";
  std::uint64_t seed = 0;
  int reps = 5;
  long long max_steps = 0;
  std::string out_path;
  std::string svg_path;
  bool timing = false;
};

int cmd_sweep(const SweepArgs& args) {
  SweepSpec spec;
  spec.sources = collect_sources(args.graph_paths, args.gen_tokens);
  spec.alphas = parse_alpha_list(args.alpha_tokens);
  spec.daemon = parse_daemon(args.daemon);
  spec.init = parse_init(args.init);
  spec.base_seed = args.seed;
  spec.reps = args.reps;
  spec.max_steps = args.max_steps;
  spec.timing = args.timing;

  const SweepResult result = run_sweep(spec);
  const std::string text = sweep_csv(result);
  if (args.out_path.empty())
    std::cout << text;
  else
    write_text_file(args.out_path, text);
  if (!args.svg_path.empty()) write_text_file(args.svg_path, sweep_svg(result));
  return result.all_stabilized ? 0 : 1;
}

int cmd_verify(const std::string& graph_path, const std::string& set_text,
               const std::string& alpha_token) {
  const Graph g = Graph::load_file(graph_path);
  const Alpha alpha = Alpha::parse(alpha_token);
  const std::vector<int> members = parse_node_list(set_text, g.n());

  std::string dominating = "budget-exceeded";
  std::string minimal = "budget-exceeded";
  std::string minimum = "budget-exceeded";
  try {
    NodeSet s = 0;
    for (int v : members) s |= NodeSet{1} << v;
    const bool dom = is_alpha_dominating(g, s, alpha);
    dominating = dom ? "yes" : "no";
    if (!dom)
      minimal = "no";
    else
      minimal = is_minimal_alpha_dominating(g, s, alpha) ? "yes" : "no";
  } catch (const Error& e) {
    if (e.code() != Errc::BudgetExceeded) throw;
  }
  try {
    minimum = std::to_string(minimum_cardinality(g, alpha));
  } catch (const Error& e) {
    if (e.code() != Errc::BudgetExceeded) throw;
  }
  std::cout << "alpha-dominating: " << dominating << "; minimal: " << minimal
            << "; minimum: " << minimum << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-stabilizing minimal alpha-dominating-set simulator"};
  app.require_subcommand(1);

  // gen-graph
  auto* gen_cmd = app.add_subcommand("gen-graph", "Generate a random connected graph file");
  std::string gen_token;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen_cmd->add_option("--gen", gen_token, "n,density")->required();
  gen_cmd->add_option("--seed", gen_seed, "generator seed");
  gen_cmd->add_option("--out", gen_out, "output edge-list path")->required();

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "Run one execution and print its result row");
  SimulateArgs sim;
  sim_cmd->add_option("--graph", sim.graph_paths, "edge-list file")->type_size(1);
  sim_cmd->add_option("--gen", sim.gen_tokens, "n,density")->type_size(1);
  sim_cmd->add_option("--alpha", sim.alpha_tokens, "threshold p/q")->required()->type_size(1);
  sim_cmd->add_option("--daemon", sim.daemon,
                      "central:random|central:minid|central:maxid|central:stale|sync|"
                      "dist:random|transformed");
  sim_cmd->add_option("--init", sim.init, "all-out|all-in|bernoulli:p");
  sim_cmd->add_option("--seed", sim.seed, "run seed");
  sim_cmd->add_option("--max-steps", sim.max_steps, "step budget (default 10*n*m)");
  sim_cmd->add_option("--out", sim.out_path, "also write the CSV here");
  sim_cmd->add_option("--trace", sim.trace_path, "write move-by-move trace CSV here");
  sim_cmd->add_flag("--timing", sim.timing, "fill wall_ms with measured time");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a parameter sweep and emit CSV");
  SweepArgs sweep;
  sweep_cmd->add_option("--graph", sweep.graph_paths, "edge-list file (repeatable)")
      ->type_size(1);
  sweep_cmd->add_option("--gen", sweep.gen_tokens, "n,density (repeatable)")->type_size(1);
  sweep_cmd->add_option("--alpha", sweep.alpha_tokens, "p/q[,p/q...] (repeatable)")
      ->required()
      ->type_size(1);
  sweep_cmd->add_option("--daemon", sweep.daemon, "daemon policy");
  sweep_cmd->add_option("--init", sweep.init, "all-out|all-in|bernoulli:p");
  sweep_cmd->add_option("--seed", sweep.seed, "base seed; repetition r uses seed+r");
  sweep_cmd->add_option("--reps", sweep.reps, "repetitions per cell (default 5)");
  sweep_cmd->add_option("--max-steps", sweep.max_steps, "step budget (default 10*n*m)");
  sweep_cmd->add_option("--out", sweep.out_path, "CSV path (default stdout)");
  sweep_cmd->add_option("--svg", sweep.svg_path, "also write a mean |S|/n line chart");
  sweep_cmd->add_flag("--timing", sweep.timing, "fill wall_ms with measured time");

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "Check a membership certificate against the oracle");
  std::string verify_graph;
  std::string verify_set;
  std::string verify_alpha;
  verify_cmd->add_option("--graph", verify_graph, "edge-list file")->required();
  verify_cmd->add_option("--set", verify_set, "comma-separated node ids (default empty)");
  verify_cmd->add_option("--alpha", verify_alpha, "threshold p/q")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen_graph(gen_token, gen_seed, gen_out);
    if (sim_cmd->parsed()) return cmd_simulate(sim);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep);
    if (verify_cmd->parsed()) return cmd_verify(verify_graph, verify_set, verify_alpha);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
