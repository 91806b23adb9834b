#ifndef ALPHADOM_ALPHA_MDS_HPP_
#define ALPHADOM_ALPHA_MDS_HPP_

#include "alphadom/engine.hpp"
#include "alphadom/graph.hpp"
#include "alphadom/rational.hpp"

// The two-rule protocol. A node v looks at the fraction of its neighbors
// currently In (exp1) and at what a neighbor's fraction would become if one
// In-neighbor left (exp2):
//
//   R1: state(v) = Out and exp1(v) < alpha          -> join
//   R2: state(v) = In  and exp1(v) >= alpha and
//       every Out-neighbor w has exp2(w) >= alpha   -> leave
//
// All comparisons are exact rational comparisons.

namespace alphadom {

int in_neighbor_count(const Graph& g, const Configuration& c, int v);

Rational exp1(const Graph& g, const Configuration& c, int v);
Rational exp2(const Graph& g, const Configuration& c, int v);

bool r1_enabled(const Graph& g, const Configuration& c, const Alpha& alpha, int v);
bool r2_enabled(const Graph& g, const Configuration& c, const Alpha& alpha, int v);

// True iff no node has R1 or R2 enabled; then S is a minimal
// alpha-dominating set and the protocol is silent.
bool legitimate(const Graph& g, const Configuration& c, const Alpha& alpha);

// Snapshot-backed variants used on the engine's hot path; they must agree
// with the direct forms above on every input.
Rational exp1(const Snapshot& snap, int v);
Rational exp2(const Snapshot& snap, int v);
bool r1_enabled(const Snapshot& snap, const Alpha& alpha, int v);
bool r2_enabled(const Snapshot& snap, const Alpha& alpha, int v);
bool legitimate(const Snapshot& snap, const Alpha& alpha);

// Rules in engine form: [R1 -> set In, R2 -> set Out].
RuleSet alpha_mds_ruleset(const Alpha& alpha);

}  // namespace alphadom

#endif  // ALPHADOM_ALPHA_MDS_HPP_
