#include "alphadom/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "alphadom/error.hpp"
#include "alphadom/random.hpp"

namespace alphadom {

namespace {

void check_connected(int n, const std::vector<std::vector<int>>& adj) {
  if (n == 0) throw Error(Errc::BadArgument, "graph must have at least one node");
  for (int v = 0; v < n; ++v)
    if (adj[v].empty())
      throw Error(Errc::Disconnected, "node " + std::to_string(v) + " is isolated");
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n)
    throw Error(Errc::Disconnected, "graph is not connected (" +
                                        std::to_string(reached) + " of " +
                                        std::to_string(n) + " nodes reachable from 0)");
}

}  // namespace

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 1) throw Error(Errc::BadArgument, "graph must have at least one node");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(Errc::InvalidEndpoint, "edge (" + std::to_string(u) + "," +
                                             std::to_string(v) + ") out of range for n=" +
                                             std::to_string(n));
    if (u == v)
      throw Error(Errc::SelfLoop, "self-loop at node " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  adj_.assign(n_, {});
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
  check_connected(n_, adj_);
}

Graph Graph::random_connected(int n, double density, std::uint64_t seed) {
  if (n < 2) throw Error(Errc::BadArgument, "generator needs n >= 2");
  if (density < 0.0 || density > 1.0)
    throw Error(Errc::BadArgument, "density must lie in [0, 1], got " +
                                       std::to_string(density));
  const std::int64_t max_m = static_cast<std::int64_t>(n) * (n - 1) / 2;
  std::int64_t target =
      std::max<std::int64_t>(n - 1, std::llround(density * static_cast<double>(max_m)));
  if (target > max_m) target = max_m;

  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(target));

  // Uniform spanning tree of K_n by Aldous-Broder: walk until all visited,
  // recording the first-entry edges.
  {
    std::vector<char> visited(n, 0);
    int current = static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(n)));
    visited[current] = 1;
    int count = 1;
    while (count < n) {
      int next = static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(n - 1)));
      if (next >= current) ++next;  // neighbor in K_n, never self
      if (!visited[next]) {
        visited[next] = 1;
        ++count;
        edges.emplace_back(std::min(current, next), std::max(current, next));
      }
      current = next;
    }
  }

  const std::int64_t extra = target - (n - 1);
  if (extra > 0) {
    std::sort(edges.begin(), edges.end());
    auto present = [&edges](int u, int v) {
      return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
    };
    if (target > max_m / 2) {
      // Dense: enumerate the non-tree pairs and take a random prefix of a
      // partial Fisher-Yates shuffle.
      std::vector<std::pair<int, int>> pool;
      pool.reserve(static_cast<std::size_t>(max_m - (n - 1)));
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (!present(u, v)) pool.emplace_back(u, v);
      for (std::int64_t i = 0; i < extra; ++i) {
        const std::uint64_t j =
            i + rng_below(rng, static_cast<std::uint64_t>(pool.size() - i));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
        edges.push_back(pool[static_cast<std::size_t>(i)]);
      }
    } else {
      // Sparse: rejection-sample fresh pairs.
      std::vector<std::pair<int, int>> added;
      auto taken = [&added](int u, int v) {
        return std::find(added.begin(), added.end(), std::make_pair(u, v)) != added.end();
      };
      while (static_cast<std::int64_t>(added.size()) < extra) {
        int u = static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(n)));
        int v = static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(n - 1)));
        if (v >= u) ++v;
        if (u > v) std::swap(u, v);
        if (present(u, v) || taken(u, v)) continue;
        added.emplace_back(u, v);
      }
      edges.insert(edges.end(), added.begin(), added.end());
    }
  }
  return Graph(n, std::move(edges));
}

Graph Graph::path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph Graph::cycle(int n) {
  if (n < 3) throw Error(Errc::BadArgument, "cycle needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return Graph(n, std::move(edges));
}

Graph Graph::complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph Graph::star(int n) {
  if (n < 2) throw Error(Errc::BadArgument, "star needs n >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph(n, std::move(edges));
}

Graph Graph::load(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw Error(Errc::MalformedHeader, "empty input, expected 'n m' header");
  std::istringstream head(line);
  long long n = 0, m = 0;
  std::string trailing;
  if (!(head >> n >> m) || (head >> trailing))
    throw Error(Errc::MalformedHeader, "expected 'n m' header, got '" + line + "'");
  if (n < 1 || m < 0)
    throw Error(Errc::MalformedHeader, "header out of range: '" + line + "'");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!std::getline(in, line))
      throw Error(Errc::MalformedEdgeLine, "expected " + std::to_string(m) +
                                               " edge lines, got " + std::to_string(i));
    std::istringstream es(line);
    long long u = 0, v = 0;
    if (!(es >> u >> v) || (es >> trailing))
      throw Error(Errc::MalformedEdgeLine, "expected 'u v', got '" + line + "'");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

Graph Graph::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open '" + path + "' for reading");
  return load(in);
}

void Graph::save(std::ostream& out) const {
  out << n_ << ' ' << m() << '\n';
  for (const auto& [u, v] : edges_) out << u << ' ' << v << '\n';
}

void Graph::save_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);  // binary: keep LF on every platform
  if (!out) throw Error(Errc::IoError, "cannot open '" + path + "' for writing");
  save(out);
  if (!out) throw Error(Errc::IoError, "write to '" + path + "' failed");
}

std::string Graph::to_edge_list() const {
  std::ostringstream out;
  save(out);
  return out.str();
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 0 || v >= n_)
    throw Error(Errc::OutOfRange, "node " + std::to_string(v) + " out of range for n=" +
                                      std::to_string(n_));
  return adj_[static_cast<std::size_t>(v)];
}

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

}  // namespace alphadom
