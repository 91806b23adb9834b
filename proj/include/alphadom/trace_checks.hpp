#ifndef ALPHADOM_TRACE_CHECKS_HPP_
#define ALPHADOM_TRACE_CHECKS_HPP_

#include <string>

#include "alphadom/engine.hpp"
#include "alphadom/graph.hpp"
#include "alphadom/rational.hpp"

// Post-hoc checks over recorded traces. Each returns true when the property
// holds; on failure an optional detail string names the first offending
// node/step. All of them replay the trace, so they also implicitly require
// that pre-states match the reconstructed configurations.

namespace alphadom {

// Applying the moves to the initial configuration reproduces the final one,
// and every record's pre-state matches the configuration it executed in.
bool replay_matches(const Trace& t, std::string* detail = nullptr);

// For every node, once its In-neighbor fraction reaches alpha while it is
// Out, the fraction never drops below alpha at a later point where the node
// is still Out. Checked at every step boundary.
bool out_ratio_monotone(const Graph& g, const Trace& t, const Alpha& alpha,
                        std::string* detail = nullptr);

// No node executes R2 and later R1 (a node that left never rejoins).
bool no_rejoin_after_leave(const Trace& t, std::string* detail = nullptr);

// Every node's R1/R2 subsequence is one of: empty, R1, R2, R1 R2; and the
// total number of R1/R2 moves is at most 2n.
bool move_sequences_canonical(const Trace& t, int n, std::string* detail = nullptr);

// Within each step, the set of moving nodes is an independent set of g.
bool movers_pairwise_independent(const Graph& g, const Trace& t,
                                 std::string* detail = nullptr);

}  // namespace alphadom

#endif  // ALPHADOM_TRACE_CHECKS_HPP_
