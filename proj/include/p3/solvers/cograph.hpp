#pragma once

#include <vector>

#include "p3/generators.hpp"
#include "p3/grundy.hpp"

namespace p3 {

// Free game on a cograph given by its cotree. A union root is the nim-sum of
// its components. A connected component is a single vertex or a join A * B,
// and every playground after two moves on it collapses to one of:
//   - the whole component (value 0);
//   - a universal labeled vertex whose untouched side components each fall in
//     one move (value = their count mod 2);
//   - two labels isolated within their sides, evaluated one ply further.
class CographSolver {
 public:
  // Throws std::invalid_argument for a malformed cotree.
  explicit CographSolver(const Cotree& c);

  Grundy start_value() const { return total_; }
  // Value of the position after the first move x (whole graph).
  Grundy after_first_move(Vertex x) const;
  Verdict verdict() const;

 private:
  struct Side {
    std::vector<Vertex> vertices;
    std::vector<std::size_t> component;  // per entry of `vertices`
    std::size_t component_count = 0;
    std::vector<bool> isolated;
  };
  struct Piece {
    Grundy value = 0;
    std::vector<Vertex> vertices;
    std::vector<Grundy> first_move;  // per entry of `vertices`
  };

  static Side make_side(const std::vector<const Cotree*>& nodes);
  static Piece solve_component(const Cotree& node);

  std::vector<Piece> pieces_;
  std::vector<std::size_t> piece_of_;
  std::vector<std::size_t> index_in_piece_;
  Grundy total_ = 0;
};

Verdict cograph_free_winner(const Cotree& c);

}  // namespace p3
