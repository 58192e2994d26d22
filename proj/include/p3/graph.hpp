#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "p3/vertex_set.hpp"

namespace p3 {

using Edge = std::pair<Vertex, Vertex>;

enum class GraphErrorKind {
  kMalformedJson,
  kOutOfRange,
  kSelfLoop,
  kDuplicateEdge,
  kInvalidParameter,
};

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  GraphErrorKind kind() const { return kind_; }

 private:
  GraphErrorKind kind_;
};

// Simple undirected graph on the contiguous ids [0, n). Immutable once built.
class Graph {
 public:
  Graph() = default;
  // Throws GraphError on out-of-range ids, self-loops, and repeated edges.
  // Edge endpoints may be given in either order.
  Graph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  const VertexSet& neighbor_set(Vertex v) const { return neighbor_sets_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const { return neighbor_sets_[u].contains(v); }

  // Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  VertexSet empty_set() const { return VertexSet(vertex_count()); }
  VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }

  // Union of N(v) over v in s (s itself not included unless adjacent).
  VertexSet neighborhood(const VertexSet& s) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<VertexSet> neighbor_sets_;
  std::size_t edge_count_ = 0;
};

// Checks simplicity, symmetry and id range of the stored adjacency. Returns an
// empty string when the graph is well formed, otherwise the first violation.
std::string validate(const Graph& g);

// Vertex sets of the connected components, ordered by their lowest vertex.
std::vector<VertexSet> connected_components(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within);

bool is_connected(const Graph& g);

// Whether the subgraph induced by s is connected. The empty set counts as connected.
bool induces_connected(const Graph& g, const VertexSet& s);

// Subgraph induced by the listed vertices; vertex i of the result is keep[i].
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep);

// Disjoint union; vertices of b are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace p3
