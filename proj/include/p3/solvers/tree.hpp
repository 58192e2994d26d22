#pragma once

#include <optional>
#include <vector>

#include "p3/graph.hpp"
#include "p3/grundy.hpp"

namespace p3 {

// Connected game on a tree by dynamic programming over branches. A playground
// is a connected subtree; every tree edge (p, c) leaving it roots an
// independent branch game, so the playground value is the nim-sum of the
// branch values. Branch values are memoized per directed edge.
class TreeSolver {
 public:
  // Throws std::invalid_argument unless t is a tree.
  explicit TreeSolver(const Graph& t);
  TreeSolver(Graph&&) = delete;

  // Value of the branch hanging below c, seen from the labeled vertex p.
  Grundy branch(Vertex p, Vertex c);
  // Value of the playground {x}.
  Grundy after_first_move(Vertex x);
  Grundy start_value();
  Verdict verdict();

 private:
  std::size_t edge_slot(Vertex p, Vertex c) const;
  // Nim-sum of the branches below c when c is labeled, excluding the one towards `from`.
  Grundy below(Vertex c, Vertex from);

  const Graph& tree_;
  std::vector<std::size_t> slot_offset_;
  std::vector<std::optional<Grundy>> memo_;
};

Grundy tree_connected_grundy(const Graph& t, std::optional<Vertex> first_move = std::nullopt);
Verdict tree_connected_winner(const Graph& t);

}  // namespace p3
