#include "alphadom/engine.hpp"

#include <algorithm>
#include <utility>

#include "alphadom/error.hpp"
#include "alphadom/random.hpp"

namespace alphadom {

Configuration Configuration::bernoulli(int n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0)
    throw Error(Errc::BadArgument, "bernoulli probability must lie in [0, 1], got " +
                                       std::to_string(p));
  Configuration c(n, NodeState::Out);
  std::mt19937_64 rng(seed);
  for (int v = 0; v < n; ++v)
    if (rng_bernoulli(rng, p)) c.set_state(v, NodeState::In);
  return c;
}

std::vector<int> Configuration::in_set() const {
  std::vector<int> s;
  for (int v = 0; v < n(); ++v)
    if (in(v)) s.push_back(v);
  return s;
}

int Configuration::in_count() const {
  int k = 0;
  for (int v = 0; v < n(); ++v)
    if (in(v)) ++k;
  return k;
}

Configuration initial_configuration(const InitSpec& spec, int n) {
  switch (spec.tag) {
    case InitTag::AllOut:
      return Configuration::all_out(n);
    case InitTag::AllIn:
      return Configuration::all_in(n);
    case InitTag::Bernoulli:
      return Configuration::bernoulli(n, spec.p, spec.seed);
  }
  throw Error(Errc::BadArgument, "unknown initial configuration kind");
}

Snapshot::Snapshot(const Graph& g, const Configuration& c) : g_(&g), c_(&c) {
  if (c.n() != g.n())
    throw Error(Errc::BadArgument, "configuration size " + std::to_string(c.n()) +
                                       " does not match graph n=" + std::to_string(g.n()));
  in_count_.assign(static_cast<std::size_t>(g.n()), 0);
  for (const auto& [u, v] : g.edges()) {
    if (c.in(v)) ++in_count_[static_cast<std::size_t>(u)];
    if (c.in(u)) ++in_count_[static_cast<std::size_t>(v)];
  }
}

Scheduler::Scheduler(const DaemonPolicy& policy, int n)
    : policy_(policy),
      rng_(policy.seed),
      last_selected_(static_cast<std::size_t>(n), -1) {
  if (policy_.family == DaemonFamily::Distributed &&
      policy_.selection != Selection::Random)
    throw Error(Errc::BadArgument, "distributed daemon supports only random selection");
}

std::vector<int> Scheduler::select(const std::vector<int>& enabled) {
  if (enabled.empty())
    throw Error(Errc::NoEnabledNode, "scheduler invoked with no enabled node");
  std::vector<int> chosen;
  switch (policy_.family) {
    case DaemonFamily::Synchronous:
      chosen = enabled;
      break;
    case DaemonFamily::Central: {
      int pick = enabled.front();
      switch (policy_.selection) {
        case Selection::MinId:
          pick = enabled.front();
          break;
        case Selection::MaxId:
          pick = enabled.back();
          break;
        case Selection::Random:
          pick = enabled[rng_below(rng_, enabled.size())];
          break;
        case Selection::AdversarialStale:
          for (int v : enabled) {
            const auto lv = last_selected_[static_cast<std::size_t>(v)];
            const auto lp = last_selected_[static_cast<std::size_t>(pick)];
            if (lv > lp || (lv == lp && v > pick)) pick = v;
          }
          break;
      }
      chosen = {pick};
      break;
    }
    case DaemonFamily::Distributed: {
      for (int v : enabled)
        if (rng_bernoulli(rng_, 0.5)) chosen.push_back(v);
      if (chosen.empty()) chosen.push_back(enabled[rng_below(rng_, enabled.size())]);
      break;
    }
  }
  for (int v : chosen) last_selected_[static_cast<std::size_t>(v)] = clock_;
  ++clock_;
  return chosen;
}

std::vector<int> enabled_nodes(const Snapshot& snap, const RuleSet& rs) {
  std::vector<int> out;
  const int n = snap.graph().n();
  for (int v = 0; v < n; ++v)
    if (first_enabled_rule(snap, rs, v) >= 0) out.push_back(v);
  return out;
}

std::vector<int> enabled_nodes(const Graph& g, const Configuration& c, const RuleSet& rs) {
  Snapshot snap(g, c);
  return enabled_nodes(snap, rs);
}

int first_enabled_rule(const Snapshot& snap, const RuleSet& rs, int v) {
  for (std::size_t i = 0; i < rs.rules.size(); ++i)
    if (rs.rules[i].guard(snap, v)) return static_cast<int>(i);
  return -1;
}

namespace {

std::vector<MoveRecord> apply_step(const Snapshot& snap, const RuleSet& rs,
                                   Scheduler& sched, const std::vector<int>& enabled,
                                   long long step_index, Configuration& c) {
  const std::vector<int> selected = sched.select(enabled);
  Configuration next = c;
  std::vector<MoveRecord> records;
  records.reserve(selected.size());
  for (int v : selected) {
    const int ri = first_enabled_rule(snap, rs, v);
    const NodeState pre = c.state(v);
    rs.rules[static_cast<std::size_t>(ri)].statement(snap, next, v);
    records.push_back({step_index, v, rs.rules[static_cast<std::size_t>(ri)].label, pre,
                       next.state(v)});
  }
  c = std::move(next);
  return records;
}

}  // namespace

std::vector<MoveRecord> step(const Graph& g, Configuration& c, const RuleSet& rs,
                             Scheduler& sched, long long step_index) {
  Snapshot snap(g, c);
  const std::vector<int> enabled = enabled_nodes(snap, rs);
  if (enabled.empty())
    throw Error(Errc::NoEnabledNode, "step on a silent configuration");
  return apply_step(snap, rs, sched, enabled, step_index, c);
}

Trace run_to_stabilization(const Graph& g, const Configuration& c0, const RuleSet& rs,
                           const DaemonPolicy& policy, long long max_steps) {
  if (max_steps <= 0) throw Error(Errc::BadArgument, "max_steps must be positive");
  Scheduler sched(policy, g.n());
  Trace t;
  t.initial = c0;
  Configuration c = c0;
  for (long long i = 0; i < max_steps; ++i) {
    Snapshot snap(g, c);
    const std::vector<int> enabled = enabled_nodes(snap, rs);
    if (enabled.empty()) {
      t.stabilized = true;
      break;
    }
    auto records = apply_step(snap, rs, sched, enabled, i, c);
    t.moves.insert(t.moves.end(), records.begin(), records.end());
    ++t.steps;
  }
  if (!t.stabilized) t.stabilized = enabled_nodes(g, c, rs).empty();
  t.final_config = std::move(c);
  return t;
}

}  // namespace alphadom
