#include "alphadom/transformer.hpp"

#include <utility>

#include "alphadom/alpha_mds.hpp"
#include "alphadom/error.hpp"
#include "alphadom/random.hpp"

namespace alphadom {

namespace {

std::pair<Rational, Rational> true_values(const Graph& g, const Configuration& c, int v) {
  const int k = in_neighbor_count(g, c, v);
  const int d = g.degree(v);
  return {Rational(k, d), Rational(k - 1, d)};
}

}  // namespace

TransformedConfig TransformedConfig::fresh(const Graph& g, const Configuration& c) {
  TransformedConfig tc;
  tc.states = c;
  tc.pub_exp1.reserve(static_cast<std::size_t>(g.n()));
  tc.pub_exp2.reserve(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) {
    auto [e1, e2] = true_values(g, c, v);
    tc.pub_exp1.push_back(e1);
    tc.pub_exp2.push_back(e2);
  }
  return tc;
}

TransformedConfig TransformedConfig::stale_zero(const Graph& g, const Configuration& c) {
  TransformedConfig tc;
  tc.states = c;
  tc.pub_exp1.assign(static_cast<std::size_t>(g.n()), Rational(0, 1));
  tc.pub_exp2.assign(static_cast<std::size_t>(g.n()), Rational(0, 1));
  return tc;
}

TransformedConfig TransformedConfig::arbitrary(const Graph& g, const Configuration& c,
                                               std::uint64_t seed) {
  TransformedConfig tc;
  tc.states = c;
  std::mt19937_64 rng(seed);
  for (int v = 0; v < g.n(); ++v) {
    const int d = g.degree(v);
    const int k1 = static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(d) + 1));
    const int k2 = static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(d) + 1));
    tc.pub_exp1.emplace_back(k1, d);
    tc.pub_exp2.emplace_back(k2 - 1, d);
  }
  return tc;
}

bool refresh_enabled(const Graph& g, const TransformedConfig& tc, int v) {
  auto [e1, e2] = true_values(g, tc.states, v);
  return tc.pub_exp1[static_cast<std::size_t>(v)] != e1 ||
         tc.pub_exp2[static_cast<std::size_t>(v)] != e2;
}

bool t_r1_enabled(const Graph& g, const TransformedConfig& tc, const Alpha& alpha, int v) {
  if (refresh_enabled(g, tc, v)) return false;
  if (tc.states.state(v) != NodeState::Out) return false;
  return exp1(g, tc.states, v) < alpha.value();
}

bool t_r2_enabled(const Graph& g, const TransformedConfig& tc, const Alpha& alpha, int v) {
  if (refresh_enabled(g, tc, v)) return false;
  if (tc.states.state(v) != NodeState::In) return false;
  if (exp1(g, tc.states, v) < alpha.value()) return false;
  for (int w : g.neighbors(v)) {
    if (tc.states.in(w)) continue;
    if (tc.pub_exp2[static_cast<std::size_t>(w)] < alpha.value()) return false;
  }
  return true;
}

std::vector<int> t_enabled_nodes(const Graph& g, const TransformedConfig& tc,
                                 const Alpha& alpha) {
  std::vector<int> out;
  for (int v = 0; v < g.n(); ++v)
    if (refresh_enabled(g, tc, v) || t_r1_enabled(g, tc, alpha, v) ||
        t_r2_enabled(g, tc, alpha, v))
      out.push_back(v);
  return out;
}

std::vector<int> priority_filter(const Graph& g, const std::vector<int>& picked) {
  std::vector<char> in_picked(static_cast<std::size_t>(g.n()), 0);
  for (int v : picked) in_picked[static_cast<std::size_t>(v)] = 1;
  std::vector<int> survivors;
  for (int v : picked) {
    bool top = true;
    for (int w : g.neighbors(v))
      if (in_picked[static_cast<std::size_t>(w)] && w > v) {
        top = false;
        break;
      }
    if (top) survivors.push_back(v);
  }
  return survivors;
}

namespace {

// First enabled rule for v against the pre-step config: 0 = R0, 1 = R1, 2 = R2,
// -1 = none.
int t_first_rule(const Graph& g, const TransformedConfig& tc, const Alpha& alpha, int v) {
  if (refresh_enabled(g, tc, v)) return 0;
  if (t_r1_enabled(g, tc, alpha, v)) return 1;
  if (t_r2_enabled(g, tc, alpha, v)) return 2;
  return -1;
}

}  // namespace

TransformedRun run_transformed(const Graph& g, const TransformedConfig& tc0,
                               const Alpha& alpha, const DaemonPolicy& policy,
                               long long max_steps) {
  if (policy.family == DaemonFamily::Central)
    throw Error(Errc::BadArgument, "transformed runs expect a distributed or synchronous daemon");
  if (max_steps <= 0) throw Error(Errc::BadArgument, "max_steps must be positive");
  if (tc0.states.n() != g.n() ||
      tc0.pub_exp1.size() != static_cast<std::size_t>(g.n()) ||
      tc0.pub_exp2.size() != static_cast<std::size_t>(g.n()))
    throw Error(Errc::BadArgument, "transformed configuration does not match graph size");

  Scheduler sched(policy, g.n());
  TransformedRun out;
  out.trace.initial = tc0.states;
  TransformedConfig tc = tc0;
  for (long long i = 0; i < max_steps; ++i) {
    const std::vector<int> enabled = t_enabled_nodes(g, tc, alpha);
    if (enabled.empty()) {
      out.trace.stabilized = true;
      break;
    }
    const std::vector<int> movers = priority_filter(g, sched.select(enabled));
    TransformedConfig next = tc;
    for (int v : movers) {
      const NodeState pre = tc.states.state(v);
      switch (t_first_rule(g, tc, alpha, v)) {
        case 0: {
          auto [e1, e2] = true_values(g, tc.states, v);
          next.pub_exp1[static_cast<std::size_t>(v)] = e1;
          next.pub_exp2[static_cast<std::size_t>(v)] = e2;
          out.trace.moves.push_back({i, v, "R0-refresh", pre, pre});
          break;
        }
        case 1:
          next.states.set_state(v, NodeState::In);
          out.trace.moves.push_back({i, v, "R1", pre, NodeState::In});
          break;
        case 2:
          next.states.set_state(v, NodeState::Out);
          out.trace.moves.push_back({i, v, "R2", pre, NodeState::Out});
          break;
        default:
          break;  // cannot happen: movers come from the enabled set
      }
    }
    tc = std::move(next);
    ++out.trace.steps;
  }
  if (!out.trace.stabilized) out.trace.stabilized = t_enabled_nodes(g, tc, alpha).empty();
  out.trace.final_config = tc.states;
  out.final_tc = std::move(tc);
  return out;
}

TransformedRun run_transformed(const Graph& g, const Configuration& c0, const Alpha& alpha,
                               const DaemonPolicy& policy, long long max_steps) {
  return run_transformed(g, TransformedConfig::stale_zero(g, c0), alpha, policy, max_steps);
}

}  // namespace alphadom
