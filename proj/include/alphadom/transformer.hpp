#ifndef ALPHADOM_TRANSFORMER_HPP_
#define ALPHADOM_TRANSFORMER_HPP_

#include <cstdint>
#include <vector>

#include "alphadom/engine.hpp"
#include "alphadom/graph.hpp"
#include "alphadom/rational.hpp"

// Distance-one variant for distributed daemons. Each node publishes its two
// expression values in registers; neighbors read registers instead of
// recomputing two-hop information. A refresh rule R0 repairs stale registers
// and takes priority over R1/R2 inside a node, and R1/R2 only fire on fresh
// self-registers. Among nodes picked to move in the same step, only those
// with an id above every picked neighbor actually move, so each step's mover
// set is independent.

namespace alphadom {

struct TransformedConfig {
  Configuration states;
  std::vector<Rational> pub_exp1;
  std::vector<Rational> pub_exp2;

  // Registers equal to the true expression values of c.
  static TransformedConfig fresh(const Graph& g, const Configuration& c);
  // Registers all 0/1, a maximally bland stale start.
  static TransformedConfig stale_zero(const Graph& g, const Configuration& c);
  // Registers drawn at random from the plausible per-node value ranges.
  static TransformedConfig arbitrary(const Graph& g, const Configuration& c,
                                     std::uint64_t seed);

  int n() const { return states.n(); }
};

// True iff v's registers differ from the values recomputed from the states
// of v's neighborhood (rule R0's guard).
bool refresh_enabled(const Graph& g, const TransformedConfig& tc, int v);

// R1/R2 with neighbor exp2 taken from published registers and both gated on
// fresh self-registers.
bool t_r1_enabled(const Graph& g, const TransformedConfig& tc, const Alpha& alpha, int v);
bool t_r2_enabled(const Graph& g, const TransformedConfig& tc, const Alpha& alpha, int v);

// Nodes with R0, R1 or R2 enabled, ascending.
std::vector<int> t_enabled_nodes(const Graph& g, const TransformedConfig& tc,
                                 const Alpha& alpha);

// Keeps v iff v's id beats every neighbor of v inside `picked`; the result is
// an independent set and is non-empty whenever `picked` is.
std::vector<int> priority_filter(const Graph& g, const std::vector<int>& picked);

struct TransformedRun {
  Trace trace;
  TransformedConfig final_tc;
};

// Runs the transformed protocol under a Distributed or Synchronous policy.
// Refresh moves are recorded with rule label "R0-refresh" (pre = post state).
TransformedRun run_transformed(const Graph& g, const TransformedConfig& tc0,
                               const Alpha& alpha, const DaemonPolicy& policy,
                               long long max_steps);

// Convenience: starts from all-zero registers.
TransformedRun run_transformed(const Graph& g, const Configuration& c0,
                               const Alpha& alpha, const DaemonPolicy& policy,
                               long long max_steps);

}  // namespace alphadom

#endif  // ALPHADOM_TRANSFORMER_HPP_
