#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "alphadom/alpha_mds.hpp"
#include "alphadom/experiment.hpp"

#include "helpers.hpp"

using namespace alphadom;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("daemon tokens round trip") {
  const char* tokens[] = {"central:random", "central:minid", "central:maxid",
                          "central:stale",  "sync",          "dist:random",
                          "transformed"};
  for (const char* t : tokens) CHECK(daemon_name(parse_daemon(t)) == std::string(t));
  CHECK(testutil::code_of([] { parse_daemon("central"); }) == Errc::BadArgument);
  CHECK(testutil::code_of([] { parse_daemon("distributed:minid"); }) == Errc::BadArgument);
}

TEST_CASE("init tokens") {
  CHECK(parse_init("all-out").tag == InitTag::AllOut);
  CHECK(parse_init("all-in").tag == InitTag::AllIn);
  const InitSpec b = parse_init("bernoulli:0.25");
  CHECK(b.tag == InitTag::Bernoulli);
  CHECK(b.p == 0.25);
  CHECK(init_name(b) == "bernoulli:0.25");
  CHECK(init_name(parse_init("all-in")) == "all-in");
  CHECK(testutil::code_of([] { parse_init("bernoulli:x"); }) == Errc::BadArgument);
  CHECK(testutil::code_of([] { parse_init("bernoulli:1.5"); }) == Errc::BadArgument);
  CHECK(testutil::code_of([] { parse_init("random"); }) == Errc::BadArgument);
}

TEST_CASE("gen tokens") {
  const GraphSource s = parse_gen("12,0.3");
  CHECK_FALSE(s.from_file);
  CHECK(s.n == 12);
  CHECK(s.density == 0.3);
  for (const char* bad : {"12", ",0.3", "12,", "a,0.5", "12,b", "1,0.5", "4,1.5"})
    CHECK(testutil::code_of([&] { parse_gen(bad); }) == Errc::BadArgument);
}

TEST_CASE("repeated runs of one RunSpec are identical") {
  RunSpec spec;
  spec.source = GraphSource::generated(10, 0.3);
  spec.alpha = Alpha(1, 2);
  spec.daemon = DaemonKind::CentralRandom;
  spec.init = parse_init("bernoulli:0.5");
  spec.seed = 7;

  const RunOutput a = run_single(spec);
  const RunOutput b = run_single(spec);
  CHECK(to_csv(a.row) == to_csv(b.row));
  REQUIRE(a.trace.move_count() == b.trace.move_count());
  for (std::size_t i = 0; i < a.trace.moves.size(); ++i) {
    CHECK(a.trace.moves[i].node == b.trace.moves[i].node);
    CHECK(a.trace.moves[i].rule == b.trace.moves[i].rule);
  }

  CHECK(a.row.n == 10);
  CHECK(a.row.m == a.graph->m());
  CHECK(a.row.alpha == "1/2");
  CHECK(a.row.init == "bernoulli:0.5");
  CHECK(a.row.daemon == "central:random");
  CHECK(a.row.stabilized);
  CHECK(a.row.set_size == a.trace.final_config.in_count());
  CHECK(a.row.set_ratio == doctest::Approx(a.row.set_size / 10.0));
  CHECK(a.row.wall_ms == 0.0);  // timing off pins the column
  CHECK(legitimate(*a.graph, a.trace.final_config, spec.alpha));
}

TEST_CASE("file sources ignore the run seed") {
  const std::string path = "exp_test_graph.txt";
  Graph::path(4).save_file(path);
  RunSpec spec;
  spec.source = GraphSource::file(path);
  spec.alpha = Alpha(1, 2);
  spec.init = parse_init("all-out");
  spec.seed = 1;
  const RunOutput a = run_single(spec);
  spec.seed = 99;
  const RunOutput c = run_single(spec);
  CHECK(a.row.n == 4);
  CHECK(a.row.m == 3);
  CHECK(c.row.n == 4);
  CHECK(c.row.m == 3);
  std::remove(path.c_str());
}

TEST_CASE("csv rendering is pinned byte for byte") {
  CHECK(csv_header() ==
        "n,m,density,alpha,seed,init,daemon,moves,stabilized,set_size,set_ratio,wall_ms\n");
  ResultRow r;
  r.n = 5;
  r.m = 7;
  r.density = 0.7;
  r.alpha = "1/2";
  r.seed = 42;
  r.init = "all-out";
  r.daemon = "central:random";
  r.moves = 6;
  r.stabilized = true;
  r.set_size = 2;
  r.set_ratio = 0.4;
  r.wall_ms = 0.0;
  CHECK(to_csv(r) == "5,7,0.700000,1/2,42,all-out,central:random,6,1,2,0.400000,0.000\n");
  MeanRow m;
  m.n = 5;
  m.m = 7;
  m.density = 0.7;
  m.alpha = "1/2";
  m.init = "all-out";
  m.daemon = "sync";
  m.moves = 6.5;
  m.stabilized = 1.0;
  m.set_size = 2.4;
  m.set_ratio = 0.48;
  m.wall_ms = 0.0;
  CHECK(to_csv(m) == "5,7,0.700000,1/2,mean,all-out,sync,6.500,1.000,2.400,0.480000,0.000\n");
  CHECK(fmt_fixed(1.0 / 3.0, 3) == "0.333");
  CHECK(fmt_fixed(0.5, 6) == "0.500000");
}

TEST_CASE("sweep layout, seeds and means") {
  SweepSpec spec;
  spec.sources = {GraphSource::generated(8, 0.4), GraphSource::generated(10, 0.6)};
  spec.alphas = {Alpha(1, 3), Alpha(2, 3)};
  spec.daemon = DaemonKind::CentralRandom;
  spec.init = parse_init("all-out");
  spec.base_seed = 100;
  spec.reps = 3;
  spec.threads = 1;

  const SweepResult res = run_sweep(spec);
  REQUIRE(res.runs.size() == 12);
  REQUIRE(res.means.size() == 4);
  CHECK(res.alphas_per_source == 2);
  CHECK(res.all_stabilized);

  // source-major, then alpha, then repetition; rep r uses base_seed + r
  CHECK(res.runs[0].alpha == "1/3");
  CHECK(res.runs[0].seed == 100);
  CHECK(res.runs[2].seed == 102);
  CHECK(res.runs[3].alpha == "2/3");
  CHECK(res.runs[6].n == 10);
  // a repetition reuses one graph across alphas
  CHECK(res.runs[0].m == res.runs[3].m);
  CHECK(res.runs[6].m == res.runs[9].m);

  double moves = 0.0, ratio = 0.0;
  for (int r = 0; r < 3; ++r) {
    moves += static_cast<double>(res.runs[static_cast<std::size_t>(r)].moves);
    ratio += res.runs[static_cast<std::size_t>(r)].set_ratio;
  }
  CHECK(res.means[0].moves == doctest::Approx(moves / 3.0));
  CHECK(res.means[0].set_ratio == doctest::Approx(ratio / 3.0));
  CHECK(res.means[0].stabilized == 1.0);
  CHECK(res.means[0].alpha == "1/3");
  CHECK(res.means[3].n == 10);
  CHECK(res.means[3].alpha == "2/3");

  CHECK(testutil::code_of([&] {
          SweepSpec bad = spec;
          bad.sources.clear();
          run_sweep(bad);
        }) == Errc::BadArgument);
  CHECK(testutil::code_of([&] {
          SweepSpec bad = spec;
          bad.alphas.clear();
          run_sweep(bad);
        }) == Errc::BadArgument);
  CHECK(testutil::code_of([&] {
          SweepSpec bad = spec;
          bad.reps = 0;
          run_sweep(bad);
        }) == Errc::BadArgument);
}

TEST_CASE("sweep output does not depend on the pool size") {
  SweepSpec spec;
  spec.sources = {GraphSource::generated(12, 0.35)};
  spec.alphas = {Alpha(1, 4), Alpha(1, 2), Alpha(3, 4)};
  spec.daemon = DaemonKind::DistRandom;
  spec.init = parse_init("bernoulli:0.3");
  spec.base_seed = 55;
  spec.reps = 4;

  spec.threads = 1;
  const std::string serial = sweep_csv(run_sweep(spec));
  spec.threads = 4;
  const std::string pooled = sweep_csv(run_sweep(spec));
  CHECK(serial == pooled);
  CHECK(serial.substr(0, csv_header().size()) == csv_header());
  // 12 run rows + 3 mean rows + header
  CHECK(std::count(serial.begin(), serial.end(), '\n') == 16);
}

TEST_CASE("trace rendering") {
  const Graph p3 = Graph::path(3);
  const DaemonPolicy minid{DaemonFamily::Central, Selection::MinId, 0, true};
  const Trace t = run_to_stabilization(p3, Configuration::all_in(3),
                                       alpha_mds_ruleset(Alpha(1, 2)), minid, 100);
  CHECK(trace_csv(t) ==
        "step,node,rule,pre,post\n"
        "0,0,R2,In,Out\n"
        "1,2,R2,In,Out\n");
}

TEST_CASE("svg chart shape") {
  SweepSpec spec;
  spec.sources = {GraphSource::generated(8, 0.5), GraphSource::generated(6, 0.9)};
  spec.alphas = {Alpha(1, 4), Alpha(1, 2), Alpha(3, 4)};
  spec.init = parse_init("all-out");
  spec.base_seed = 9;
  spec.reps = 2;
  spec.threads = 1;
  const std::string svg = sweep_svg(run_sweep(spec));
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>\n") != std::string::npos);
  CHECK(svg.find("mean |S|/n") != std::string::npos);
  std::size_t polylines = 0, pos = 0;
  while ((pos = svg.find("<polyline", pos)) != std::string::npos) {
    ++polylines;
    pos += 9;
  }
  CHECK(polylines == 2);  // one series per source
  CHECK(svg.find("n=8") != std::string::npos);
  CHECK(svg.find("n=6") != std::string::npos);
}

TEST_CASE("text files are written verbatim") {
  const std::string path = "exp_test_out.csv";
  write_text_file(path, "a,b\n1,2\n");
  CHECK(slurp(path) == "a,b\n1,2\n");
  std::remove(path.c_str());
  CHECK(testutil::code_of([] {
          write_text_file("no-such-dir/exp_test_out.csv", "x");
        }) == Errc::IoError);
}
