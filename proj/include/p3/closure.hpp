#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "p3/graph.hpp"
#include "p3/vertex_set.hpp"

namespace p3 {

enum class Variant { kFree, kConnected };

std::string_view to_string(Variant v);

// True iff no vertex outside s has two or more neighbors in s.
bool is_p3_closed(const Graph& g, const VertexSet& s);

// Smallest P3-closed superset of a. Counter-and-queue fixpoint, O(n + m).
VertexSet hull(const Graph& g, const VertexSet& a);

// hull(closed ∪ {x}) for an already closed set. Only the neighbors of newly
// labeled vertices can cross the threshold, so the walk starts at x.
VertexSet extend_hull(const Graph& g, const VertexSet& closed, Vertex x);

// Vertices within distance two of s (including s).
VertexSet ball2(const Graph& g, const VertexSet& s);

class IllegalMove : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A playground: the labeled set is P3-closed, and under the connected variant
// it induces a connected subgraph whenever it is nonempty.
class Position {
 public:
  static Position start(const Graph& g, Variant v) { return Position(g, g.empty_set(), v); }
  // Throws std::invalid_argument when `labeled` violates the invariants above.
  static Position from(const Graph& g, VertexSet labeled, Variant v);

  const Graph& graph() const { return *graph_; }
  const VertexSet& labeled() const { return labeled_; }
  Variant variant() const { return variant_; }

  friend bool operator==(const Position& a, const Position& b) {
    return a.graph_ == b.graph_ && a.variant_ == b.variant_ && a.labeled_ == b.labeled_;
  }

 private:
  Position(const Graph& g, VertexSet labeled, Variant v)
      : graph_(&g), labeled_(std::move(labeled)), variant_(v) {}

  friend Position apply_move(const Position& p, Vertex x);

  const Graph* graph_;
  VertexSet labeled_;
  Variant variant_;
};

// Free: every unlabeled vertex. Connected: every vertex while nothing is labeled,
// afterwards the unlabeled vertices within distance two of the labeled set.
VertexSet legal_moves(const Position& p);
VertexSet legal_moves(const Graph& g, const VertexSet& labeled, Variant v);

// Labels x and closes the result. Throws IllegalMove if x is not legal.
Position apply_move(const Position& p, Vertex x);

}  // namespace p3
