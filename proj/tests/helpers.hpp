#ifndef TESTS_HELPERS_HPP_
#define TESTS_HELPERS_HPP_

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "alphadom/engine.hpp"
#include "alphadom/error.hpp"
#include "alphadom/graph.hpp"
#include "alphadom/random.hpp"

namespace testutil {

inline alphadom::Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const alphadom::Error& e) {
    return e.code();
  }
  throw std::runtime_error("expected an Error to be thrown");
}

// Every connected simple graph on labeled nodes 0..n-1. Feasible for n <= 5.
inline std::vector<alphadom::Graph> all_connected_graphs(int n) {
  std::vector<std::pair<int, int>> all_pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
  std::vector<alphadom::Graph> graphs;
  const std::uint64_t limit = std::uint64_t{1} << all_pairs.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < all_pairs.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) edges.push_back(all_pairs[i]);
    try {
      graphs.emplace_back(n, std::move(edges));
    } catch (const alphadom::Error&) {
      // disconnected candidate
    }
  }
  return graphs;
}

// Deterministic mixed-size corpus of random connected graphs.
inline std::vector<alphadom::Graph> random_graph_corpus(int count, int n_min, int n_max,
                                                        std::uint64_t seed) {
  std::vector<alphadom::Graph> graphs;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    const int n = n_min + static_cast<int>(alphadom::rng_below(
                              rng, static_cast<std::uint64_t>(n_max - n_min + 1)));
    const double density =
        0.1 + 0.85 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    graphs.push_back(alphadom::Graph::random_connected(n, density, rng()));
  }
  return graphs;
}

inline alphadom::Configuration config_from_mask(int n, std::uint64_t mask) {
  alphadom::Configuration c(n);
  for (int v = 0; v < n; ++v)
    if (mask & (std::uint64_t{1} << v)) c.set_state(v, alphadom::NodeState::In);
  return c;
}

}  // namespace testutil

#endif  // TESTS_HELPERS_HPP_
