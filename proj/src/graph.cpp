#include "gensol/graph.hpp"

#include <algorithm>

#include "gensol/parallel.hpp"

namespace gensol {

std::size_t GenGraph::edge_count() const {
  std::size_t twice = 0;
  for (const Bitset& row : adjacency) twice += row.count();
  return twice / 2;
}

std::optional<std::size_t> GenGraph::vertex_of(Elem e) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), e);
  if (it != vertices.end() && *it == e) return static_cast<std::size_t>(it - vertices.begin());
  // Vertex lists are sorted when built here, but fall back to a scan.
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == e) return i;
  return std::nullopt;
}

GenGraph build_graph(std::vector<Elem> vertices, const EdgePredicate& pred, int threads) {
  GenGraph graph;
  const std::size_t n = vertices.size();
  graph.vertices = std::move(vertices);
  graph.adjacency.assign(n, Bitset(n));
  graph.isolated = Bitset(n);

  // Upper triangle in parallel (each row owned by one worker), then mirror.
  run_workers(threads, [&](int worker, int count) {
    for (std::size_t u = static_cast<std::size_t>(worker); u < n; u += static_cast<std::size_t>(count))
      for (std::size_t v = u + 1; v < n; ++v)
        if (pred(graph.vertices[u], graph.vertices[v])) graph.adjacency[u].set(v);
  });
  for (std::size_t u = 0; u < n; ++u)
    graph.adjacency[u].for_each([&](std::size_t v) {
      if (v > u) graph.adjacency[v].set(u);
    });
  for (std::size_t u = 0; u < n; ++u)
    if (!graph.adjacency[u].any()) graph.isolated.set(u);
  return graph;
}

GenGraph generating_graph(const CayleyGroup& g, int threads) {
  std::vector<Elem> vertices;
  for (Elem x = 0; x < g.order(); ++x)
    if (x != g.identity()) vertices.push_back(x);
  return build_graph(std::move(vertices), [&g](Elem a, Elem b) { return generates_pair(g, a, b); },
                     threads);
}

GenGraph delta_subgraph(const GenGraph& gamma) {
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < gamma.size(); ++v)
    if (!gamma.isolated.test(v)) keep.push_back(v);
  GenGraph delta;
  const std::size_t n = keep.size();
  delta.adjacency.assign(n, Bitset(n));
  delta.isolated = Bitset(n);
  for (std::size_t i = 0; i < n; ++i) {
    delta.vertices.push_back(gamma.vertices[keep[i]]);
    for (std::size_t j = 0; j < n; ++j)
      if (gamma.adjacency[keep[i]].test(keep[j])) delta.adjacency[i].set(j);
  }
  return delta;
}

std::vector<int> bfs_distances(const GenGraph& graph, std::size_t source) {
  const std::size_t n = graph.size();
  std::vector<int> dist(n, -1);
  Bitset visited(n);
  Bitset frontier(n);
  visited.set(source);
  frontier.set(source);
  dist[source] = 0;
  for (int level = 1; frontier.any(); ++level) {
    Bitset next(n);
    frontier.for_each([&](std::size_t v) { next |= graph.adjacency[v]; });
    next.subtract(visited);
    next.for_each([&](std::size_t v) { dist[v] = level; });
    visited |= next;
    frontier = std::move(next);
  }
  return dist;
}

std::optional<int> distance(const GenGraph& graph, std::size_t u, std::size_t v) {
  if (graph.size() > 1 && (graph.isolated.test(u) || graph.isolated.test(v)))
    throw Error(ErrorCode::IsolatedVertex, "distance query on an isolated vertex");
  const int d = bfs_distances(graph, u)[v];
  if (d < 0) return std::nullopt;
  return d;
}

std::optional<int> eccentricity(const GenGraph& graph, std::size_t u) {
  if (graph.size() > 1 && graph.isolated.test(u))
    throw Error(ErrorCode::IsolatedVertex, "eccentricity of an isolated vertex");
  int ecc = 0;
  for (int d : bfs_distances(graph, u)) {
    if (d < 0) return std::nullopt;
    ecc = std::max(ecc, d);
  }
  return ecc;
}

bool is_connected(const GenGraph& graph) {
  if (graph.size() < 2) return true;
  for (int d : bfs_distances(graph, 0))
    if (d < 0) return false;
  return true;
}

std::vector<int> eccentricities(const GenGraph& graph, int threads) {
  const std::size_t n = graph.size();
  std::vector<int> ecc(n, 0);
  run_workers(threads, [&](int worker, int count) {
    for (std::size_t u = static_cast<std::size_t>(worker); u < n; u += static_cast<std::size_t>(count)) {
      int e = 0;
      for (int d : bfs_distances(graph, u)) {
        if (d < 0) {
          e = -1;
          break;
        }
        e = std::max(e, d);
      }
      ecc[u] = e;
    }
  });
  return ecc;
}

std::optional<int> diameter(const GenGraph& graph, int threads) {
  if (graph.size() < 2) return 0;
  if (!is_connected(graph)) return std::nullopt;
  const std::vector<int> ecc = eccentricities(graph, threads);
  return *std::max_element(ecc.begin(), ecc.end());
}

}  // namespace gensol
