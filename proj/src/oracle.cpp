#include "alphadom/oracle.hpp"

#include <bit>
#include <string>

#include "alphadom/error.hpp"

namespace alphadom {

namespace {

void require_mask_size(int n, const char* what) {
  if (n > 60)
    throw Error(Errc::BudgetExceeded,
                std::string(what) + " limited to n <= 60, got n = " + std::to_string(n));
}

// k/deg >= alpha, exactly.
bool ratio_at_least(int k, int deg, const Rational& alpha) {
  return static_cast<__int128>(k) * alpha.den() >=
         static_cast<__int128>(alpha.num()) * deg;
}

bool dominating_masked(const std::vector<NodeSet>& adj, int n, NodeSet s,
                       const Rational& alpha, const Graph& g) {
  for (int v = 0; v < n; ++v) {
    if (s & (NodeSet{1} << v)) continue;
    const int k = std::popcount(adj[static_cast<std::size_t>(v)] & s);
    if (!ratio_at_least(k, g.degree(v), alpha)) return false;
  }
  return true;
}

}  // namespace

std::vector<NodeSet> adjacency_masks(const Graph& g) {
  require_mask_size(g.n(), "adjacency masks");
  std::vector<NodeSet> adj(static_cast<std::size_t>(g.n()), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= NodeSet{1} << v;
    adj[static_cast<std::size_t>(v)] |= NodeSet{1} << u;
  }
  return adj;
}

NodeSet in_set_mask(const Configuration& c) {
  require_mask_size(c.n(), "set masks");
  NodeSet s = 0;
  for (int v = 0; v < c.n(); ++v)
    if (c.in(v)) s |= NodeSet{1} << v;
  return s;
}

bool is_alpha_dominating(const Graph& g, NodeSet s, const Alpha& alpha) {
  const auto adj = adjacency_masks(g);
  return dominating_masked(adj, g.n(), s, alpha.value(), g);
}

bool is_minimal_alpha_dominating(const Graph& g, NodeSet s, const Alpha& alpha) {
  if (std::popcount(s) > 25)
    throw Error(Errc::BudgetExceeded, "full minimality check limited to |s| <= 25, got " +
                                          std::to_string(std::popcount(s)));
  const auto adj = adjacency_masks(g);
  const Rational& a = alpha.value();
  if (!dominating_masked(adj, g.n(), s, a, g)) return false;
  if (s == 0) return true;  // the empty set has no proper subsets
  // Necessary pre-check: any single removal that still dominates refutes
  // minimality immediately.
  for (int u = 0; u < g.n(); ++u) {
    const NodeSet bit = NodeSet{1} << u;
    if ((s & bit) && dominating_masked(adj, g.n(), s & ~bit, a, g)) return false;
  }
  // Exhaustive pass over every proper subset of s.
  for (NodeSet sub = (s - 1) & s;; sub = (sub - 1) & s) {
    if (dominating_masked(adj, g.n(), sub, a, g)) return false;
    if (sub == 0) break;
  }
  return true;
}

bool is_minimal_alpha_dominating_removal(const Graph& g, NodeSet s, const Alpha& alpha) {
  const auto adj = adjacency_masks(g);
  const Rational& a = alpha.value();
  if (!dominating_masked(adj, g.n(), s, a, g)) return false;
  for (int u = 0; u < g.n(); ++u) {
    const NodeSet bit = NodeSet{1} << u;
    if ((s & bit) && dominating_masked(adj, g.n(), s & ~bit, a, g)) return false;
  }
  return true;
}

int minimum_cardinality(const Graph& g, const Alpha& alpha) {
  if (g.n() > 25)
    throw Error(Errc::BudgetExceeded, "minimum cardinality search limited to n <= 25, got n = " +
                                          std::to_string(g.n()));
  const auto adj = adjacency_masks(g);
  const Rational& a = alpha.value();
  const int n = g.n();
  const NodeSet limit = NodeSet{1} << n;
  if (dominating_masked(adj, n, 0, a, g)) return 0;
  for (int k = 1; k <= n; ++k) {
    // Gosper's hack: all n-bit masks with exactly k bits, ascending.
    NodeSet s = (NodeSet{1} << k) - 1;
    while (s < limit) {
      if (dominating_masked(adj, n, s, a, g)) return k;
      const NodeSet c = s & -s;
      const NodeSet r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return n;  // unreachable: s = V is always alpha-dominating
}

bool is_dominating_classical(const Graph& g, NodeSet s) {
  const auto adj = adjacency_masks(g);
  for (int v = 0; v < g.n(); ++v) {
    const NodeSet bit = NodeSet{1} << v;
    if (s & bit) continue;
    if ((adj[static_cast<std::size_t>(v)] & s) == 0) return false;
  }
  return true;
}

bool is_minimal_dominating_classical(const Graph& g, NodeSet s) {
  if (!is_dominating_classical(g, s)) return false;
  for (int u = 0; u < g.n(); ++u) {
    const NodeSet bit = NodeSet{1} << u;
    if ((s & bit) && is_dominating_classical(g, s & ~bit)) return false;
  }
  return true;
}

std::vector<NodeSet> all_minimal_alpha_dominating(const Graph& g, const Alpha& alpha) {
  if (g.n() > 20)
    throw Error(Errc::BudgetExceeded, "minimal-set enumeration limited to n <= 20, got n = " +
                                          std::to_string(g.n()));
  const auto adj = adjacency_masks(g);
  const Rational& a = alpha.value();
  std::vector<NodeSet> result;
  const NodeSet limit = NodeSet{1} << g.n();
  for (NodeSet s = 0; s < limit; ++s) {
    if (!dominating_masked(adj, g.n(), s, a, g)) continue;
    bool minimal = true;
    for (int u = 0; u < g.n() && minimal; ++u) {
      const NodeSet bit = NodeSet{1} << u;
      if ((s & bit) && dominating_masked(adj, g.n(), s & ~bit, a, g)) minimal = false;
    }
    if (minimal) result.push_back(s);
  }
  return result;
}

}  // namespace alphadom
