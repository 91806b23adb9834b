#ifndef ALPHADOM_ENGINE_HPP_
#define ALPHADOM_ENGINE_HPP_

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "alphadom/graph.hpp"

namespace alphadom {

enum class NodeState : std::uint8_t { Out = 0, In = 1 };

inline const char* state_name(NodeState s) {
  return s == NodeState::In ? "In" : "Out";
}

// Per-node protocol state. S = {v : state(v) = In} is always derived.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(int n, NodeState fill = NodeState::Out)
      : states_(static_cast<std::size_t>(n), fill) {}

  static Configuration all_out(int n) { return Configuration(n, NodeState::Out); }
  static Configuration all_in(int n) { return Configuration(n, NodeState::In); }
  static Configuration bernoulli(int n, double p, std::uint64_t seed);

  int n() const { return static_cast<int>(states_.size()); }
  NodeState state(int v) const { return states_[static_cast<std::size_t>(v)]; }
  void set_state(int v, NodeState s) { states_[static_cast<std::size_t>(v)] = s; }
  bool in(int v) const { return state(v) == NodeState::In; }

  std::vector<int> in_set() const;
  int in_count() const;

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.states_ == b.states_;
  }
  friend bool operator!=(const Configuration& a, const Configuration& b) {
    return !(a == b);
  }

 private:
  std::vector<NodeState> states_;
};

enum class InitTag { AllOut, AllIn, Bernoulli };

struct InitSpec {
  InitTag tag = InitTag::AllOut;
  double p = 0.5;          // Bernoulli only
  std::uint64_t seed = 0;  // Bernoulli only
};

Configuration initial_configuration(const InitSpec& spec, int n);

// One consistent global snapshot: the graph, a frozen configuration, and the
// cached In-neighbor counts every guard reads from. Building one is O(n + m).
class Snapshot {
 public:
  Snapshot(const Graph& g, const Configuration& c);

  const Graph& graph() const { return *g_; }
  const Configuration& config() const { return *c_; }
  NodeState state(int v) const { return c_->state(v); }
  int in_neighbor_count(int v) const { return in_count_[static_cast<std::size_t>(v)]; }

 private:
  const Graph* g_;
  const Configuration* c_;
  std::vector<int> in_count_;
};

// A guarded rule. Guards read only the snapshot; statements read the snapshot
// and write the next configuration, so a step's writes never leak into the
// guards or statements of nodes moving in the same step.
struct Rule {
  std::string label;
  std::function<bool(const Snapshot&, int)> guard;
  std::function<void(const Snapshot&, Configuration&, int)> statement;
};

// Ordered rule list shared by every node; the first enabled rule fires.
struct RuleSet {
  std::vector<Rule> rules;
};

struct MoveRecord {
  long long step = 0;
  int node = 0;
  std::string rule;
  NodeState pre = NodeState::Out;
  NodeState post = NodeState::Out;
};

struct Trace {
  Configuration initial;
  std::vector<MoveRecord> moves;
  Configuration final_config;
  bool stabilized = false;
  long long steps = 0;  // daemon activations actually taken

  long long move_count() const { return static_cast<long long>(moves.size()); }
};

enum class DaemonFamily { Central, Distributed, Synchronous };
enum class Selection { Random, MinId, MaxId, AdversarialStale };

struct DaemonPolicy {
  DaemonFamily family = DaemonFamily::Central;
  Selection selection = Selection::Random;
  std::uint64_t seed = 0;
  bool fair = true;  // informational only
};

// Stateful chooser for one run. AdversarialStale keeps re-picking the most
// recently activated enabled node, starving the rest as long as it can.
class Scheduler {
 public:
  Scheduler(const DaemonPolicy& policy, int n);

  // enabled must be non-empty and ascending; returns the activated subset.
  std::vector<int> select(const std::vector<int>& enabled);

  const DaemonPolicy& policy() const { return policy_; }

 private:
  DaemonPolicy policy_;
  std::mt19937_64 rng_;
  std::vector<long long> last_selected_;
  long long clock_ = 0;
};

// Nodes with at least one true guard, ascending.
std::vector<int> enabled_nodes(const Snapshot& snap, const RuleSet& rs);
std::vector<int> enabled_nodes(const Graph& g, const Configuration& c, const RuleSet& rs);

// Index into rs.rules of v's first enabled rule, or -1.
int first_enabled_rule(const Snapshot& snap, const RuleSet& rs, int v);

// One daemon step: evaluate guards on a snapshot of c, let the scheduler pick,
// apply every picked node's first enabled rule, commit all writes at once.
// Throws NoEnabledNode when the configuration is already silent.
std::vector<MoveRecord> step(const Graph& g, Configuration& c, const RuleSet& rs,
                             Scheduler& sched, long long step_index);

// Repeats step until no node is enabled or max_steps daemon activations have
// been spent. Budget exhaustion yields stabilized = false, never an error.
Trace run_to_stabilization(const Graph& g, const Configuration& c0, const RuleSet& rs,
                           const DaemonPolicy& policy, long long max_steps);

inline long long default_max_steps(const Graph& g) {
  return 10LL * g.n() * g.m();
}

}  // namespace alphadom

#endif  // ALPHADOM_ENGINE_HPP_
