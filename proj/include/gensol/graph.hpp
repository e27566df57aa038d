#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gensol/bitset.hpp"
#include "gensol/group.hpp"

namespace gensol {

/// Undirected graph on group elements with bit-packed adjacency. Vertex v
/// stands for element `vertices[v]`.
struct GenGraph {
  std::vector<Elem> vertices;
  std::vector<Bitset> adjacency;
  Bitset isolated;

  std::size_t size() const noexcept { return vertices.size(); }
  std::size_t edge_count() const;
  std::size_t isolated_count() const { return isolated.count(); }
  /// Vertex position of element e, if present.
  std::optional<std::size_t> vertex_of(Elem e) const;
  bool adjacent(std::size_t u, std::size_t v) const { return adjacency[u].test(v); }
};

using EdgePredicate = std::function<bool(Elem, Elem)>;

/// Graph on `vertices` with an edge {u, v} (u != v) whenever pred holds. The
/// predicate is evaluated once per unordered pair; rows are split over
/// `threads` workers.
GenGraph build_graph(std::vector<Elem> vertices, const EdgePredicate& pred, int threads = 1);

/// Gamma(G): non-identity elements, edges are generating pairs.
GenGraph generating_graph(const CayleyGroup& g, int threads = 1);
/// Delta: the subgraph induced on the non-isolated vertices.
GenGraph delta_subgraph(const GenGraph& gamma);

/// BFS distances from `source` (-1 for unreachable).
std::vector<int> bfs_distances(const GenGraph& graph, std::size_t source);
/// Throws IsolatedVertex when either endpoint has no neighbour.
std::optional<int> distance(const GenGraph& graph, std::size_t u, std::size_t v);
/// nullopt if some vertex is unreachable from u.
std::optional<int> eccentricity(const GenGraph& graph, std::size_t u);
bool is_connected(const GenGraph& graph);
/// Maximum eccentricity; nullopt if disconnected, 0 for graphs with < 2 vertices.
std::optional<int> diameter(const GenGraph& graph, int threads = 1);
/// All eccentricities (-1 where some vertex is unreachable).
std::vector<int> eccentricities(const GenGraph& graph, int threads = 1);

}  // namespace gensol
