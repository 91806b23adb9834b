#ifndef ALPHADOM_GRAPH_HPP_
#define ALPHADOM_GRAPH_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace alphadom {

// Immutable simple connected graph on nodes 0..n-1. Every constructor path
// validates simplicity and connectivity; once built, a Graph cannot change.
class Graph {
 public:
  // Builds from an explicit edge list. Throws Error on self-loops, endpoints
  // out of range, or a disconnected result. Duplicate edges collapse.
  Graph(int n, std::vector<std::pair<int, int>> edges);

  // Uniform-ish random connected graph: a uniform spanning tree (Aldous-Broder
  // walk on the complete graph) plus random extra non-tree edges until
  // m = max(n-1, round(density * n*(n-1)/2)). Deterministic in (n, density, seed).
  static Graph random_connected(int n, double density, std::uint64_t seed);

  // Named small graphs used throughout the tests.
  static Graph path(int n);
  static Graph cycle(int n);
  static Graph complete(int n);
  static Graph star(int n);  // node 0 is the hub

  // Text form: "n m" header, then one "u v" line per edge with u < v,
  // lexicographically sorted.
  static Graph load(std::istream& in);
  static Graph load_file(const std::string& path);
  void save(std::ostream& out) const;
  void save_file(const std::string& path) const;
  std::string to_edge_list() const;

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  const std::vector<int>& neighbors(int v) const;
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int u, int v) const;

  double density() const {
    if (n_ < 2) return 0.0;
    return static_cast<double>(m()) * 2.0 / (static_cast<double>(n_) * (n_ - 1));
  }

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;   // u < v, sorted
  std::vector<std::vector<int>> adj_;        // sorted neighbor lists
};

}  // namespace alphadom

#endif  // ALPHADOM_GRAPH_HPP_
