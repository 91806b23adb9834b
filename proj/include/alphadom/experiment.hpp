#ifndef ALPHADOM_EXPERIMENT_HPP_
#define ALPHADOM_EXPERIMENT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alphadom/engine.hpp"
#include "alphadom/graph.hpp"
#include "alphadom/rational.hpp"

namespace alphadom {

enum class DaemonKind {
  CentralRandom,
  CentralMinId,
  CentralMaxId,
  CentralStale,
  Sync,
  DistRandom,
  Transformed,
};

// Tokens: central:random, central:minid, central:maxid, central:stale, sync,
// dist:random, transformed.
DaemonKind parse_daemon(const std::string& token);
const char* daemon_name(DaemonKind k);

// Tokens: all-out, all-in, bernoulli:p (p a probability, not an alpha).
InitSpec parse_init(const std::string& token);
std::string init_name(const InitSpec& spec);

struct GraphSource {
  bool from_file = false;
  std::string path;     // when from_file
  int n = 0;            // when generated
  double density = 0.0; // when generated

  static GraphSource file(std::string p);
  static GraphSource generated(int n, double density);
};

// "n,density" as passed to --gen.
GraphSource parse_gen(const std::string& token);

// Loads or generates the graph for one run. Generated graphs derive their
// seed from the run seed, so runs differing only in alpha share a graph.
Graph realize_graph(const GraphSource& src, std::uint64_t run_seed);

struct RunSpec {
  GraphSource source;
  Alpha alpha{1, 2};
  DaemonKind daemon = DaemonKind::CentralRandom;
  InitSpec init;
  std::uint64_t seed = 0;
  long long max_steps = 0;  // 0 picks 10 * n * m
  bool timing = false;      // off keeps wall_ms at 0.000 for byte determinism
};

struct ResultRow {
  int n = 0;
  int m = 0;
  double density = 0.0;
  std::string alpha;
  std::uint64_t seed = 0;
  std::string init;
  std::string daemon;
  long long moves = 0;
  bool stabilized = false;
  int set_size = 0;
  double set_ratio = 0.0;
  double wall_ms = 0.0;
};

struct MeanRow {
  int n = 0;
  int m = 0;
  double density = 0.0;
  std::string alpha;
  std::string init;
  std::string daemon;
  double moves = 0.0;
  double stabilized = 0.0;  // fraction of runs
  double set_size = 0.0;
  double set_ratio = 0.0;
  double wall_ms = 0.0;
};

struct RunOutput {
  ResultRow row;
  Trace trace;
  std::optional<Graph> graph;  // always engaged on return
};

RunOutput run_single(const RunSpec& spec);

struct SweepSpec {
  std::vector<GraphSource> sources;
  std::vector<Alpha> alphas;
  DaemonKind daemon = DaemonKind::CentralRandom;
  InitSpec init;
  std::uint64_t base_seed = 0;
  int reps = 5;
  long long max_steps = 0;
  bool timing = false;
  int threads = 0;  // 0 picks a small pool from hardware_concurrency
};

struct SweepResult {
  std::vector<ResultRow> runs;   // source-major, then alpha, then repetition
  std::vector<MeanRow> means;    // one per (source, alpha), same order
  int alphas_per_source = 0;
  bool all_stabilized = true;
};

// Runs the cross product sources x alphas x reps. Repetition r of any cell
// uses seed base_seed + r; rows come back in spec order no matter how the
// worker pool interleaves.
SweepResult run_sweep(const SweepSpec& spec);

// CSV rendering. Header:
// n,m,density,alpha,seed,init,daemon,moves,stabilized,set_size,set_ratio,wall_ms
std::string csv_header();
std::string to_csv(const ResultRow& r);
std::string to_csv(const MeanRow& r);
std::string sweep_csv(const SweepResult& result);

// Move-by-move dump: "step,node,rule,pre,post" lines.
std::string trace_csv(const Trace& t);

// Minimal line chart of mean set_ratio against alpha, one polyline per
// graph source.
std::string sweep_svg(const SweepResult& result);

void write_text_file(const std::string& path, const std::string& content);

std::string fmt_fixed(double v, int decimals);

}  // namespace alphadom

#endif  // ALPHADOM_EXPERIMENT_HPP_
