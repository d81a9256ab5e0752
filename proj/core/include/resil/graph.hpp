#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace resil {

using Vertex = std::uint32_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted list of distinct pairs.
using EdgeSet = std::vector<Edge>;

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Normalizes and deduplicates `edges`. Throws PreconditionError on a
  /// self-loop or an endpoint >= n.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t num_vertices() const noexcept { return adjacency_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  /// Sorted ascending.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  std::size_t max_degree() const noexcept;

  bool has_edge(Vertex a, Vertex b) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.num_vertices() == b.num_vertices() && a.edges_ == b.edges_;
  }

 private:
  static std::uint64_t key(Vertex a, Vertex b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }

  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::unordered_set<std::uint64_t> edge_keys_;
};

/// Reads the DIMACS edge format (`p edge n m`, `e u v`, 1-indexed, `c` comments).
Graph parse_graph(std::string_view text);

/// Writes `p edge n m` then one `e u v` line per edge in sorted order.
std::string serialize_graph(const Graph& g);

/// Copy of `g` with the pairs of `extra` added. Every pair must be a non-edge.
Graph add_edges(const Graph& g, std::span<const Edge> extra);

/// New vertex n joined to every existing vertex.
Graph apex_extension(const Graph& g);

/// All unordered non-adjacent pairs, lexicographically sorted.
EdgeSet non_edges(const Graph& g);

Graph complete_graph(std::size_t k);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);

namespace classic {

Graph petersen();
Graph durer();
Graph grotzsch();
Graph chvatal();

/// Generalized Petersen graph GP(n, k).
Graph generalized_petersen(std::size_t n, std::size_t k);

/// Mycielskian of `g`: 2n+1 vertices.
Graph mycielskian(const Graph& g);

/// K_{k+2} with the disjoint edges {0,1} and {2,3} removed.
Graph complete_minus_matching(std::size_t k);

/// K_k plus one isolated vertex (vertex k).
Graph complete_plus_isolated(std::size_t k);

}  // namespace classic

/// Named lookup used by the CLI: petersen, durer, grotzsch, chvatal,
/// complete, complete_minus_matching, complete_plus_isolated, cycle, path.
/// Throws PreconditionError for unknown names or a missing/invalid parameter.
Graph make_classic(std::string_view name, std::span<const long long> params = {});

}  // namespace resil
