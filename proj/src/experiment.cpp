#include "alphadom/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>
#include <utility>

#include "alphadom/alpha_mds.hpp"
#include "alphadom/error.hpp"
#include "alphadom/random.hpp"
#include "alphadom/transformer.hpp"

namespace alphadom {

namespace {

constexpr std::uint64_t kGraphStream = 1;
constexpr std::uint64_t kInitStream = 2;
constexpr std::uint64_t kDaemonStream = 3;

}  // namespace

DaemonKind parse_daemon(const std::string& token) {
  if (token == "central:random") return DaemonKind::CentralRandom;
  if (token == "central:minid") return DaemonKind::CentralMinId;
  if (token == "central:maxid") return DaemonKind::CentralMaxId;
  if (token == "central:stale") return DaemonKind::CentralStale;
  if (token == "sync") return DaemonKind::Sync;
  if (token == "dist:random") return DaemonKind::DistRandom;
  if (token == "transformed") return DaemonKind::Transformed;
  throw Error(Errc::BadArgument,
              "unknown daemon '" + token +
                  "' (expected central:random|central:minid|central:maxid|"
                  "central:stale|sync|dist:random|transformed)");
}

const char* daemon_name(DaemonKind k) {
  switch (k) {
    case DaemonKind::CentralRandom: return "central:random";
    case DaemonKind::CentralMinId: return "central:minid";
    case DaemonKind::CentralMaxId: return "central:maxid";
    case DaemonKind::CentralStale: return "central:stale";
    case DaemonKind::Sync: return "sync";
    case DaemonKind::DistRandom: return "dist:random";
    case DaemonKind::Transformed: return "transformed";
  }
  return "?";
}

InitSpec parse_init(const std::string& token) {
  InitSpec spec;
  if (token == "all-out") {
    spec.tag = InitTag::AllOut;
    return spec;
  }
  if (token == "all-in") {
    spec.tag = InitTag::AllIn;
    return spec;
  }
  const std::string prefix = "bernoulli:";
  if (token.rfind(prefix, 0) == 0) {
    spec.tag = InitTag::Bernoulli;
    const std::string ptext = token.substr(prefix.size());
    try {
      std::size_t pos = 0;
      spec.p = std::stod(ptext, &pos);
      if (pos != ptext.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw Error(Errc::BadArgument, "bad bernoulli probability '" + ptext + "'");
    }
    if (spec.p < 0.0 || spec.p > 1.0)
      throw Error(Errc::BadArgument, "bernoulli probability must lie in [0, 1], got " + ptext);
    return spec;
  }
  throw Error(Errc::BadArgument,
              "unknown init '" + token + "' (expected all-out|all-in|bernoulli:p)");
}

std::string init_name(const InitSpec& spec) {
  switch (spec.tag) {
    case InitTag::AllOut: return "all-out";
    case InitTag::AllIn: return "all-in";
    case InitTag::Bernoulli: {
      char buf[48];
      std::snprintf(buf, sizeof buf, "bernoulli:%g", spec.p);
      return buf;
    }
  }
  return "?";
}

GraphSource GraphSource::file(std::string p) {
  GraphSource s;
  s.from_file = true;
  s.path = std::move(p);
  return s;
}

GraphSource GraphSource::generated(int n, double density) {
  GraphSource s;
  s.n = n;
  s.density = density;
  return s;
}

GraphSource parse_gen(const std::string& token) {
  const auto comma = token.find(',');
  if (comma == std::string::npos || comma == 0 || comma + 1 == token.size())
    throw Error(Errc::BadArgument, "--gen expects n,density, got '" + token + "'");
  int n = 0;
  double density = 0.0;
  try {
    std::size_t pos = 0;
    n = std::stoi(token.substr(0, comma), &pos);
    if (pos != comma) throw std::invalid_argument("");
    const std::string dtext = token.substr(comma + 1);
    density = std::stod(dtext, &pos);
    if (pos != dtext.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw Error(Errc::BadArgument, "--gen expects n,density, got '" + token + "'");
  }
  if (n < 2) throw Error(Errc::BadArgument, "--gen needs n >= 2");
  if (density < 0.0 || density > 1.0)
    throw Error(Errc::BadArgument, "--gen density must lie in [0, 1]");
  return GraphSource::generated(n, density);
}

Graph realize_graph(const GraphSource& src, std::uint64_t run_seed) {
  if (src.from_file) return Graph::load_file(src.path);
  return Graph::random_connected(src.n, src.density, derive_seed(run_seed, kGraphStream));
}

RunOutput run_single(const RunSpec& spec) {
  Graph g = realize_graph(spec.source, spec.seed);
  InitSpec init = spec.init;
  init.seed = derive_seed(spec.seed, kInitStream);
  const Configuration c0 = initial_configuration(init, g.n());
  const long long max_steps = spec.max_steps > 0 ? spec.max_steps : default_max_steps(g);
  const std::uint64_t daemon_seed = derive_seed(spec.seed, kDaemonStream);

  const auto t0 = std::chrono::steady_clock::now();
  Trace trace;
  switch (spec.daemon) {
    case DaemonKind::CentralRandom:
    case DaemonKind::CentralMinId:
    case DaemonKind::CentralMaxId:
    case DaemonKind::CentralStale:
    case DaemonKind::Sync:
    case DaemonKind::DistRandom: {
      DaemonPolicy policy;
      policy.seed = daemon_seed;
      switch (spec.daemon) {
        case DaemonKind::CentralRandom:
          policy = {DaemonFamily::Central, Selection::Random, daemon_seed, true};
          break;
        case DaemonKind::CentralMinId:
          policy = {DaemonFamily::Central, Selection::MinId, daemon_seed, true};
          break;
        case DaemonKind::CentralMaxId:
          policy = {DaemonFamily::Central, Selection::MaxId, daemon_seed, true};
          break;
        case DaemonKind::CentralStale:
          policy = {DaemonFamily::Central, Selection::AdversarialStale, daemon_seed, false};
          break;
        case DaemonKind::Sync:
          policy = {DaemonFamily::Synchronous, Selection::Random, daemon_seed, true};
          break;
        default:
          policy = {DaemonFamily::Distributed, Selection::Random, daemon_seed, true};
          break;
      }
      trace = run_to_stabilization(g, c0, alpha_mds_ruleset(spec.alpha), policy, max_steps);
      break;
    }
    case DaemonKind::Transformed: {
      const DaemonPolicy policy{DaemonFamily::Distributed, Selection::Random, daemon_seed,
                                true};
      trace = run_transformed(g, c0, spec.alpha, policy, max_steps).trace;
      break;
    }
  }
  const auto t1 = std::chrono::steady_clock::now();

  RunOutput out;
  out.row.n = g.n();
  out.row.m = g.m();
  out.row.density = g.density();
  out.row.alpha = spec.alpha.str();
  out.row.seed = spec.seed;
  out.row.init = init_name(spec.init);
  out.row.daemon = daemon_name(spec.daemon);
  out.row.moves = trace.move_count();
  out.row.stabilized = trace.stabilized;
  out.row.set_size = trace.final_config.in_count();
  out.row.set_ratio = static_cast<double>(out.row.set_size) / g.n();
  out.row.wall_ms =
      spec.timing
          ? std::chrono::duration<double, std::milli>(t1 - t0).count()
          : 0.0;
  out.trace = std::move(trace);
  out.graph = std::move(g);
  return out;
}

SweepResult run_sweep(const SweepSpec& spec) {
  if (spec.sources.empty()) throw Error(Errc::BadArgument, "sweep needs a graph source");
  if (spec.alphas.empty()) throw Error(Errc::BadArgument, "sweep needs at least one alpha");
  if (spec.reps < 1) throw Error(Errc::BadArgument, "sweep needs reps >= 1");

  std::vector<RunSpec> tasks;
  tasks.reserve(spec.sources.size() * spec.alphas.size() *
                static_cast<std::size_t>(spec.reps));
  for (const GraphSource& src : spec.sources)
    for (const Alpha& a : spec.alphas)
      for (int rep = 0; rep < spec.reps; ++rep) {
        RunSpec rs;
        rs.source = src;
        rs.alpha = a;
        rs.daemon = spec.daemon;
        rs.init = spec.init;
        rs.seed = spec.base_seed + static_cast<std::uint64_t>(rep);
        rs.max_steps = spec.max_steps;
        rs.timing = spec.timing;
        tasks.push_back(std::move(rs));
      }

  std::vector<ResultRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  const auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        rows[i] = run_single(tasks[i]).row;
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };

  unsigned pool = spec.threads > 0 ? static_cast<unsigned>(spec.threads)
                                   : std::thread::hardware_concurrency();
  pool = std::clamp(pool, 1u, 8u);
  pool = std::min<unsigned>(pool, static_cast<unsigned>(tasks.size()));
  std::vector<std::thread> threads;
  for (unsigned i = 1; i < pool; ++i) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);

  SweepResult result;
  result.runs = std::move(rows);
  result.alphas_per_source = static_cast<int>(spec.alphas.size());
  for (const ResultRow& r : result.runs)
    if (!r.stabilized) result.all_stabilized = false;

  const std::size_t reps = static_cast<std::size_t>(spec.reps);
  for (std::size_t gi = 0; gi < spec.sources.size(); ++gi)
    for (std::size_t ai = 0; ai < spec.alphas.size(); ++ai) {
      const std::size_t base = (gi * spec.alphas.size() + ai) * reps;
      MeanRow mean;
      const ResultRow& first = result.runs[base];
      mean.n = first.n;
      mean.m = first.m;
      mean.density = first.density;
      mean.alpha = first.alpha;
      mean.init = first.init;
      mean.daemon = first.daemon;
      for (std::size_t r = 0; r < reps; ++r) {
        const ResultRow& row = result.runs[base + r];
        mean.moves += static_cast<double>(row.moves);
        mean.stabilized += row.stabilized ? 1.0 : 0.0;
        mean.set_size += row.set_size;
        mean.set_ratio += row.set_ratio;
        mean.wall_ms += row.wall_ms;
      }
      const double k = static_cast<double>(reps);
      mean.moves /= k;
      mean.stabilized /= k;
      mean.set_size /= k;
      mean.set_ratio /= k;
      mean.wall_ms /= k;
      result.means.push_back(std::move(mean));
    }
  return result;
}

std::string fmt_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string csv_header() {
  return "n,m,density,alpha,seed,init,daemon,moves,stabilized,set_size,set_ratio,wall_ms\n";
}

std::string to_csv(const ResultRow& r) {
  std::string line;
  line += std::to_string(r.n) + ",";
  line += std::to_string(r.m) + ",";
  line += fmt_fixed(r.density, 6) + ",";
  line += r.alpha + ",";
  line += std::to_string(r.seed) + ",";
  line += r.init + ",";
  line += r.daemon + ",";
  line += std::to_string(r.moves) + ",";
  line += r.stabilized ? "1," : "0,";
  line += std::to_string(r.set_size) + ",";
  line += fmt_fixed(r.set_ratio, 6) + ",";
  line += fmt_fixed(r.wall_ms, 3) + "\n";
  return line;
}

std::string to_csv(const MeanRow& r) {
  std::string line;
  line += std::to_string(r.n) + ",";
  line += std::to_string(r.m) + ",";
  line += fmt_fixed(r.density, 6) + ",";
  line += r.alpha + ",";
  line += "mean,";
  line += r.init + ",";
  line += r.daemon + ",";
  line += fmt_fixed(r.moves, 3) + ",";
  line += fmt_fixed(r.stabilized, 3) + ",";
  line += fmt_fixed(r.set_size, 3) + ",";
  line += fmt_fixed(r.set_ratio, 6) + ",";
  line += fmt_fixed(r.wall_ms, 3) + "\n";
  return line;
}

std::string sweep_csv(const SweepResult& result) {
  std::string text = csv_header();
  for (const ResultRow& r : result.runs) text += to_csv(r);
  for (const MeanRow& r : result.means) text += to_csv(r);
  return text;
}

std::string trace_csv(const Trace& t) {
  std::string text = "step,node,rule,pre,post\n";
  for (const MoveRecord& mv : t.moves) {
    text += std::to_string(mv.step) + ",";
    text += std::to_string(mv.node) + ",";
    text += mv.rule + ",";
    text += state_name(mv.pre);
    text += ",";
    text += state_name(mv.post);
    text += "\n";
  }
  return text;
}

namespace {

std::string source_label(const MeanRow& mean) {
  return "n=" + std::to_string(mean.n) + " density=" + fmt_fixed(mean.density, 3);
}

}  // namespace

std::string sweep_svg(const SweepResult& result) {
  constexpr double kWidth = 640, kHeight = 420;
  constexpr double kLeft = 64, kRight = 608, kTop = 24, kBottom = 376;
  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                  "#9467bd", "#ff7f0e", "#8c564b"};
  const auto x_of = [&](double a) { return kLeft + a * (kRight - kLeft); };
  const auto y_of = [&](double ratio) { return kBottom - ratio * (kBottom - kTop); };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt_fixed(kWidth, 0) +
         "\" height=\"" + fmt_fixed(kHeight, 0) + "\" viewBox=\"0 0 " +
         fmt_fixed(kWidth, 0) + " " + fmt_fixed(kHeight, 0) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double v = i / 4.0;
    svg += "<line x1=\"" + fmt_fixed(x_of(0), 1) + "\" y1=\"" + fmt_fixed(y_of(v), 1) +
           "\" x2=\"" + fmt_fixed(x_of(1), 1) + "\" y2=\"" + fmt_fixed(y_of(v), 1) +
           "\" stroke=\"#dddddd\"/>\n";
    svg += "<text x=\"" + fmt_fixed(kLeft - 8, 1) + "\" y=\"" + fmt_fixed(y_of(v) + 4, 1) +
           "\" font-size=\"12\" text-anchor=\"end\">" + fmt_fixed(v, 2) + "</text>\n";
    svg += "<text x=\"" + fmt_fixed(x_of(v), 1) + "\" y=\"" + fmt_fixed(kBottom + 18, 1) +
           "\" font-size=\"12\" text-anchor=\"middle\">" + fmt_fixed(v, 2) + "</text>\n";
  }
  svg += "<line x1=\"" + fmt_fixed(kLeft, 1) + "\" y1=\"" + fmt_fixed(kTop, 1) + "\" x2=\"" +
         fmt_fixed(kLeft, 1) + "\" y2=\"" + fmt_fixed(kBottom, 1) +
         "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + fmt_fixed(kLeft, 1) + "\" y1=\"" + fmt_fixed(kBottom, 1) +
         "\" x2=\"" + fmt_fixed(kRight, 1) + "\" y2=\"" + fmt_fixed(kBottom, 1) +
         "\" stroke=\"black\"/>\n";
  svg += "<text x=\"" + fmt_fixed((kLeft + kRight) / 2, 1) + "\" y=\"" +
         fmt_fixed(kHeight - 6, 1) +
         "\" font-size=\"13\" text-anchor=\"middle\">alpha</text>\n";
  svg += "<text x=\"16\" y=\"" + fmt_fixed((kTop + kBottom) / 2, 1) +
         "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         fmt_fixed((kTop + kBottom) / 2, 1) + ")\">mean |S|/n</text>\n";

  // Group mean rows into one series per source; rows arrive source-major.
  const std::size_t group =
      result.alphas_per_source > 0 ? static_cast<std::size_t>(result.alphas_per_source)
                                   : result.means.size();
  std::size_t idx = 0;
  int series = 0;
  while (idx < result.means.size()) {
    std::string points;
    const std::size_t start = idx;
    for (; idx < result.means.size() && idx < start + group; ++idx) {
      const MeanRow& row = result.means[idx];
      const Alpha a = Alpha::parse(row.alpha);
      points += fmt_fixed(x_of(a.to_double()), 1) + "," +
                fmt_fixed(y_of(row.set_ratio), 1) + " ";
    }
    const char* color = kColors[series % 6];
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"2\" points=\"" + points + "\"/>\n";
    svg += "<text x=\"" + fmt_fixed(kRight - 4, 1) + "\" y=\"" +
           fmt_fixed(kTop + 16 + 16 * series, 1) + "\" font-size=\"12\" fill=\"" + color +
           "\" text-anchor=\"end\">" + source_label(result.means[start]) + "</text>\n";
    ++series;
  }
  svg += "</svg>\n";
  return svg;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IoError, "cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw Error(Errc::IoError, "write to '" + path + "' failed");
}

}  // namespace alphadom
