#include "alphadom/alpha_mds.hpp"

namespace alphadom {

namespace {

// exp1(v) < alpha, exactly: n_in * q < p * deg.
bool ratio_below(int n_in, int deg, const Rational& alpha) {
  return Rational(n_in, deg) < alpha;
}

// exp2(w) >= alpha, exactly: (n_in - 1) * q >= p * deg.
bool drop_ratio_at_least(int n_in, int deg, const Rational& alpha) {
  return Rational(n_in - 1, deg) >= alpha;
}

}  // namespace

int in_neighbor_count(const Graph& g, const Configuration& c, int v) {
  int k = 0;
  for (int w : g.neighbors(v))
    if (c.in(w)) ++k;
  return k;
}

Rational exp1(const Graph& g, const Configuration& c, int v) {
  return Rational(in_neighbor_count(g, c, v), g.degree(v));
}

Rational exp2(const Graph& g, const Configuration& c, int v) {
  return Rational(in_neighbor_count(g, c, v) - 1, g.degree(v));
}

bool r1_enabled(const Graph& g, const Configuration& c, const Alpha& alpha, int v) {
  if (c.state(v) != NodeState::Out) return false;
  return ratio_below(in_neighbor_count(g, c, v), g.degree(v), alpha.value());
}

bool r2_enabled(const Graph& g, const Configuration& c, const Alpha& alpha, int v) {
  if (c.state(v) != NodeState::In) return false;
  if (ratio_below(in_neighbor_count(g, c, v), g.degree(v), alpha.value())) return false;
  for (int w : g.neighbors(v)) {
    if (c.in(w)) continue;
    if (!drop_ratio_at_least(in_neighbor_count(g, c, w), g.degree(w), alpha.value()))
      return false;
  }
  return true;
}

bool legitimate(const Graph& g, const Configuration& c, const Alpha& alpha) {
  for (int v = 0; v < g.n(); ++v)
    if (r1_enabled(g, c, alpha, v) || r2_enabled(g, c, alpha, v)) return false;
  return true;
}

Rational exp1(const Snapshot& snap, int v) {
  return Rational(snap.in_neighbor_count(v), snap.graph().degree(v));
}

Rational exp2(const Snapshot& snap, int v) {
  return Rational(snap.in_neighbor_count(v) - 1, snap.graph().degree(v));
}

bool r1_enabled(const Snapshot& snap, const Alpha& alpha, int v) {
  if (snap.state(v) != NodeState::Out) return false;
  return ratio_below(snap.in_neighbor_count(v), snap.graph().degree(v), alpha.value());
}

bool r2_enabled(const Snapshot& snap, const Alpha& alpha, int v) {
  const Graph& g = snap.graph();
  if (snap.state(v) != NodeState::In) return false;
  if (ratio_below(snap.in_neighbor_count(v), g.degree(v), alpha.value())) return false;
  for (int w : g.neighbors(v)) {
    if (snap.state(w) == NodeState::In) continue;
    if (!drop_ratio_at_least(snap.in_neighbor_count(w), g.degree(w), alpha.value()))
      return false;
  }
  return true;
}

bool legitimate(const Snapshot& snap, const Alpha& alpha) {
  for (int v = 0; v < snap.graph().n(); ++v)
    if (r1_enabled(snap, alpha, v) || r2_enabled(snap, alpha, v)) return false;
  return true;
}

RuleSet alpha_mds_ruleset(const Alpha& alpha) {
  RuleSet rs;
  rs.rules.push_back(
      {"R1",
       [alpha](const Snapshot& snap, int v) { return r1_enabled(snap, alpha, v); },
       [](const Snapshot&, Configuration& next, int v) {
         next.set_state(v, NodeState::In);
       }});
  rs.rules.push_back(
      {"R2",
       [alpha](const Snapshot& snap, int v) { return r2_enabled(snap, alpha, v); },
       [](const Snapshot&, Configuration& next, int v) {
         next.set_state(v, NodeState::Out);
       }});
  return rs;
}

}  // namespace alphadom
