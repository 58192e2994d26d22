#include "p3/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace p3 {

Graph::Graph(std::size_t n, const std::vector<Edge>& edges)
    : adjacency_(n), neighbor_sets_(n, VertexSet(n)) {
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      std::ostringstream os;
      os << "edge [" << u << "," << v << "] references a vertex outside [0," << n << ")";
      throw GraphError(GraphErrorKind::kOutOfRange, os.str());
    }
    if (u == v) {
      std::ostringstream os;
      os << "self-loop at vertex " << u;
      throw GraphError(GraphErrorKind::kSelfLoop, os.str());
    }
    if (neighbor_sets_[u].contains(v)) {
      std::ostringstream os;
      os << "duplicate edge [" << std::min(u, v) << "," << std::max(u, v) << "]";
      throw GraphError(GraphErrorKind::kDuplicateEdge, os.str());
    }
    neighbor_sets_[u].insert(v);
    neighbor_sets_[v].insert(u);
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    ++edge_count_;
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

VertexSet Graph::neighborhood(const VertexSet& s) const {
  VertexSet out(vertex_count());
  s.for_each([&](Vertex v) { out |= neighbor_sets_[v]; });
  return out;
}

std::string validate(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::size_t degree_sum = 0;
  for (Vertex u = 0; u < n; ++u) {
    const auto& list = g.neighbors(u);
    degree_sum += list.size();
    if (g.neighbor_set(u).universe() != n) return "neighbor set universe mismatch";
    if (g.neighbor_set(u).size() != list.size()) return "parallel edge at vertex " + std::to_string(u);
    for (Vertex v : list) {
      if (v >= n) return "vertex id out of range";
      if (v == u) return "self-loop at vertex " + std::to_string(u);
      if (!g.neighbor_set(v).contains(u)) return "asymmetric adjacency";
    }
  }
  if (degree_sum != 2 * g.edge_count()) return "edge count mismatch";
  return {};
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet unseen = within;
  while (!unseen.empty()) {
    VertexSet comp(g.vertex_count());
    VertexSet frontier(g.vertex_count());
    frontier.insert(unseen.first());
    while (!frontier.empty()) {
      comp |= frontier;
      frontier = (g.neighborhood(frontier) & within) - comp;
    }
    unseen -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return connected_components(g, g.all_vertices());
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool induces_connected(const Graph& g, const VertexSet& s) {
  return connected_components(g, s).size() <= 1;
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep) {
  std::vector<Vertex> index(g.vertex_count(), static_cast<Vertex>(g.vertex_count()));
  for (Vertex i = 0; i < keep.size(); ++i) index[keep[i]] = i;
  std::vector<Edge> edges;
  for (Vertex i = 0; i < keep.size(); ++i)
    for (Vertex w : g.neighbors(keep[i]))
      if (index[w] < keep.size() && i < index[w]) edges.emplace_back(i, index[w]);
  return Graph(keep.size(), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  const auto shift = static_cast<Vertex>(a.vertex_count());
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph(a.vertex_count() + b.vertex_count(), edges);
}

}  // namespace p3
