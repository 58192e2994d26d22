#include "p3/closure.hpp"

#include <vector>

namespace p3 {

std::string_view to_string(Variant v) { return v == Variant::kFree ? "free" : "connected"; }

bool is_p3_closed(const Graph& g, const VertexSet& s) {
  for (Vertex x = 0; x < g.vertex_count(); ++x)
    if (!s.contains(x) && g.neighbor_set(x).intersection_size(s) >= 2) return false;
  return true;
}

VertexSet hull(const Graph& g, const VertexSet& a) {
  VertexSet out = a;
  std::vector<unsigned> labeled_neighbors(g.vertex_count(), 0);
  std::vector<Vertex> queue;
  auto touch = [&](Vertex v) {
    for (Vertex w : g.neighbors(v)) {
      if (out.contains(w)) continue;
      if (++labeled_neighbors[w] == 2) queue.push_back(w);
    }
  };
  a.for_each(touch);
  while (!queue.empty()) {
    const Vertex w = queue.back();
    queue.pop_back();
    out.insert(w);
    touch(w);
  }
  return out;
}

VertexSet extend_hull(const Graph& g, const VertexSet& closed, Vertex x) {
  VertexSet out = closed.with(x);
  std::vector<Vertex> queue{x};
  while (!queue.empty()) {
    const Vertex v = queue.back();
    queue.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (out.contains(w) || g.neighbor_set(w).intersection_size(out) < 2) continue;
      out.insert(w);
      queue.push_back(w);
    }
  }
  return out;
}

VertexSet ball2(const Graph& g, const VertexSet& s) {
  VertexSet one = s | g.neighborhood(s);
  return one | g.neighborhood(one - s);
}

Position Position::from(const Graph& g, VertexSet labeled, Variant v) {
  if (labeled.universe() != g.vertex_count())
    throw std::invalid_argument("labeled set universe does not match the graph");
  if (!is_p3_closed(g, labeled)) throw std::invalid_argument("labeled set is not P3-closed");
  if (v == Variant::kConnected && !induces_connected(g, labeled))
    throw std::invalid_argument("labeled set of a connected position must induce a connected subgraph");
  return Position(g, std::move(labeled), v);
}

VertexSet legal_moves(const Graph& g, const VertexSet& labeled, Variant v) {
  if (v == Variant::kFree || labeled.empty()) return labeled.complement();
  return ball2(g, labeled) - labeled;
}

VertexSet legal_moves(const Position& p) { return legal_moves(p.graph(), p.labeled(), p.variant()); }

Position apply_move(const Position& p, Vertex x) {
  if (!legal_moves(p).contains(x)) throw IllegalMove("vertex " + std::to_string(x) + " is not a legal move");
  return Position(p.graph(), extend_hull(p.graph(), p.labeled(), x), p.variant());
}

}  // namespace p3
