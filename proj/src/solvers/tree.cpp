#include "p3/solvers/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace p3 {

TreeSolver::TreeSolver(const Graph& t) : tree_(t) {
  if (t.vertex_count() == 0) throw std::invalid_argument("tree needs at least one vertex");
  if (t.edge_count() != t.vertex_count() - 1 || !is_connected(t)) {
    throw std::invalid_argument(t.edge_count() >= t.vertex_count() ? "not a tree: cycle detected"
                                                                    : "not a tree: graph is disconnected");
  }
  slot_offset_.resize(t.vertex_count() + 1, 0);
  for (Vertex v = 0; v < t.vertex_count(); ++v) slot_offset_[v + 1] = slot_offset_[v] + t.degree(v);
  memo_.resize(slot_offset_.back());
}

std::size_t TreeSolver::edge_slot(Vertex p, Vertex c) const {
  const auto& nb = tree_.neighbors(p);
  auto it = std::lower_bound(nb.begin(), nb.end(), c);
  if (it == nb.end() || *it != c) throw std::invalid_argument("branch key is not a tree edge");
  return slot_offset_[p] + static_cast<std::size_t>(it - nb.begin());
}

Grundy TreeSolver::below(Vertex c, Vertex from) {
  Grundy acc = 0;
  for (Vertex d : tree_.neighbors(c))
    if (d != from) acc ^= branch(c, d);
  return acc;
}

Grundy TreeSolver::branch(Vertex p, Vertex c) {
  auto& slot = memo_[edge_slot(p, c)];
  if (slot) return *slot;
  std::vector<Grundy> options;
  // Label c itself.
  const Grundy at_c = below(c, p);
  options.push_back(at_c);
  // Label a grandchild d of p; the hull absorbs c.
  for (Vertex d : tree_.neighbors(c)) {
    if (d == p) continue;
    options.push_back(at_c ^ branch(c, d) ^ below(d, c));
  }
  slot = mex(options);
  return *slot;
}

Grundy TreeSolver::after_first_move(Vertex x) {
  if (x >= tree_.vertex_count()) throw std::out_of_range("first move outside the tree");
  return below(x, static_cast<Vertex>(tree_.vertex_count()));
}

Grundy TreeSolver::start_value() {
  std::vector<Grundy> options;
  for (Vertex x = 0; x < tree_.vertex_count(); ++x) options.push_back(after_first_move(x));
  return mex(options);
}

Verdict TreeSolver::verdict() {
  Verdict v;
  v.grundy = start_value();
  v.winner = *v.grundy != 0 ? Winner::kFirst : Winner::kSecond;
  if (v.winner == Winner::kFirst) {
    for (Vertex x = 0; x < tree_.vertex_count(); ++x) {
      if (after_first_move(x) == 0) {
        v.witness = x;
        break;
      }
    }
  }
  return v;
}

Grundy tree_connected_grundy(const Graph& t, std::optional<Vertex> first_move) {
  TreeSolver solver(t);
  return first_move ? solver.after_first_move(*first_move) : solver.start_value();
}

Verdict tree_connected_winner(const Graph& t) { return TreeSolver(t).verdict(); }

}  // namespace p3
