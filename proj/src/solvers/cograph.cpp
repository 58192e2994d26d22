#include "p3/solvers/cograph.hpp"

#include <stdexcept>

namespace p3 {

CographSolver::Side CographSolver::make_side(const std::vector<const Cotree*>& nodes) {
  Side side;
  auto add_component = [&](const Cotree& comp) {
    const auto leaves = comp.leaves();
    for (Vertex v : leaves) {
      side.vertices.push_back(v);
      side.component.push_back(side.component_count);
      side.isolated.push_back(leaves.size() == 1);
    }
    ++side.component_count;
  };
  if (nodes.size() == 1 && nodes.front()->kind == Cotree::Kind::kUnion) {
    for (const auto& child : nodes.front()->children) add_component(child);
  } else if (nodes.size() == 1) {
    add_component(*nodes.front());
  } else {
    // A join of two or more children is connected and has no isolated vertex.
    for (const Cotree* node : nodes) {
      for (Vertex v : node->leaves()) {
        side.vertices.push_back(v);
        side.component.push_back(0);
        side.isolated.push_back(false);
      }
    }
    side.component_count = 1;
  }
  return side;
}

CographSolver::Piece CographSolver::solve_component(const Cotree& node) {
  Piece piece;
  if (node.is_leaf()) {
    piece.vertices = {node.leaf};
    piece.first_move = {0};
    piece.value = 1;
    return piece;
  }
  std::vector<const Cotree*> rest;
  for (std::size_t i = 1; i < node.children.size(); ++i) rest.push_back(&node.children[i]);
  const Side a = make_side({&node.children.front()});
  const Side b = make_side(rest);
  const Side* sides[2] = {&a, &b};

  struct Label {
    int side;
    std::size_t index;
  };
  std::vector<Label> labels;
  for (int s = 0; s < 2; ++s)
    for (std::size_t i = 0; i < sides[s]->vertices.size(); ++i) labels.push_back({s, i});

  // Value of the playground hull({x, y}) on this component.
  auto two_move_value = [&](Label x, Label y) -> Grundy {
    if (x.side == y.side) {
      const Side& own = *sides[x.side];
      const Side& other = *sides[1 - x.side];
      // Every vertex of the other side sees both labels.
      if (other.vertices.size() >= 2) return 0;
      const std::size_t touched = own.component[x.index] == own.component[y.index] ? 1 : 2;
      return static_cast<Grundy>((own.component_count - touched) & 1u);
    }
    if (x.side == 1) std::swap(x, y);
    if (b.vertices.size() == 1) return static_cast<Grundy>((a.component_count - 1) & 1u);
    if (a.vertices.size() == 1) return static_cast<Grundy>((b.component_count - 1) & 1u);
    if (!a.isolated[x.index] || !b.isolated[y.index]) return 0;
    // Hull is {x, y}. A third label z on either side closes the opposite side
    // (two labels there), which has >= 2 vertices and then closes everything.
    std::vector<Grundy> third;
    for (std::size_t z = 0; z < a.vertices.size(); ++z)
      if (z != x.index) third.push_back(0);
    for (std::size_t z = 0; z < b.vertices.size(); ++z)
      if (z != y.index) third.push_back(0);
    return mex(third);
  };

  std::vector<Grundy> first_values;
  for (const Label& x : labels) {
    std::vector<Grundy> replies;
    for (const Label& y : labels)
      if (x.side != y.side || x.index != y.index) replies.push_back(two_move_value(x, y));
    piece.vertices.push_back(sides[x.side]->vertices[x.index]);
    piece.first_move.push_back(mex(replies));
  }
  piece.value = mex(piece.first_move);
  return piece;
}

CographSolver::CographSolver(const Cotree& c) {
  if (auto err = validate(c); !err.empty()) throw std::invalid_argument("malformed cotree: " + err);
  if (c.kind == Cotree::Kind::kUnion) {
    for (const auto& child : c.children) pieces_.push_back(solve_component(child));
  } else {
    pieces_.push_back(solve_component(c));
  }
  const std::size_t n = c.leaf_count();
  piece_of_.resize(n);
  index_in_piece_.resize(n);
  for (std::size_t p = 0; p < pieces_.size(); ++p) {
    total_ ^= pieces_[p].value;
    for (std::size_t i = 0; i < pieces_[p].vertices.size(); ++i) {
      piece_of_[pieces_[p].vertices[i]] = p;
      index_in_piece_[pieces_[p].vertices[i]] = i;
    }
  }
}

Grundy CographSolver::after_first_move(Vertex x) const {
  if (x >= piece_of_.size()) throw std::out_of_range("vertex outside the cograph");
  const Piece& piece = pieces_[piece_of_[x]];
  return total_ ^ piece.value ^ piece.first_move[index_in_piece_[x]];
}

Verdict CographSolver::verdict() const {
  Verdict v;
  v.grundy = total_;
  v.winner = total_ != 0 ? Winner::kFirst : Winner::kSecond;
  if (v.winner == Winner::kFirst) {
    for (Vertex x = 0; x < piece_of_.size(); ++x) {
      if (after_first_move(x) == 0) {
        v.witness = x;
        break;
      }
    }
  }
  return v;
}

Verdict cograph_free_winner(const Cotree& c) { return CographSolver(c).verdict(); }

}  // namespace p3
