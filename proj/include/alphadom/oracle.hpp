#ifndef ALPHADOM_ORACLE_HPP_
#define ALPHADOM_ORACLE_HPP_

#include <cstdint>
#include <vector>

#include "alphadom/engine.hpp"
#include "alphadom/graph.hpp"
#include "alphadom/rational.hpp"

// Brute-force ground truth, deliberately written with no shortcuts beyond
// bitmask adjacency. Everything here is exponential or worse and guarded by
// explicit budgets; the simulator is never trusted to check itself.

namespace alphadom {

// Membership bitmask over [0, n); bit v set means v is in the set.
using NodeSet = std::uint64_t;

// One mask per node; requires n <= 60.
std::vector<NodeSet> adjacency_masks(const Graph& g);

NodeSet in_set_mask(const Configuration& c);

// Every node outside s has at least an alpha fraction of its neighbors in s.
bool is_alpha_dominating(const Graph& g, NodeSet s, const Alpha& alpha);

// is_alpha_dominating(s) and no proper subset of s is alpha-dominating.
// Enumerates all subsets of s after a single-removal pre-check; throws
// BudgetExceeded when |s| > 25.
bool is_minimal_alpha_dominating(const Graph& g, NodeSet s, const Alpha& alpha);

// Single-removal form: is_alpha_dominating(s) and for every u in s,
// s \ {u} is not alpha-dominating. Because adding nodes to s never breaks
// alpha-domination, this coincides with the full-subset check; the test
// suite verifies that equivalence exhaustively on small graphs.
bool is_minimal_alpha_dominating_removal(const Graph& g, NodeSet s, const Alpha& alpha);

// Smallest |s| over all alpha-dominating s, by exhaustive enumeration in
// increasing cardinality. Throws BudgetExceeded when n > 25.
int minimum_cardinality(const Graph& g, const Alpha& alpha);

// Classical domination: every node outside s has a neighbor in s.
bool is_dominating_classical(const Graph& g, NodeSet s);
bool is_minimal_dominating_classical(const Graph& g, NodeSet s);

// All minimal alpha-dominating sets; requires n <= 20.
std::vector<NodeSet> all_minimal_alpha_dominating(const Graph& g, const Alpha& alpha);

}  // namespace alphadom

#endif  // ALPHADOM_ORACLE_HPP_
