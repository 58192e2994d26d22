#pragma once

#include <optional>
#include <vector>

#include "p3/generators.hpp"
#include "p3/grundy.hpp"

namespace p3 {

// Connected game on a caterpillar. Every playground after two moves is a
// labeled backbone interval [a, b] plus some labeled feet; it splits into the
// sub-caterpillar left of a, the one right of b, and one single-edge game
// (value 1) per unlabeled foot on [a, b]. The side games are tabulated per
// labeled end: O(backbone) subproblems. Vertex ids follow make_caterpillar.
class CaterpillarSolver {
 public:
  explicit CaterpillarSolver(CaterpillarSpec spec);

  // Backbone 0..i with i labeled; feet of i excluded.
  Grundy left(std::size_t i);
  // Backbone i..n-1 with i labeled; feet of i excluded.
  Grundy right(std::size_t i);

  // Labeled interval [a, b] with `labeled_feet` of its feet labeled.
  Grundy interval_value(std::size_t a, std::size_t b, std::size_t labeled_feet);

  // Value of the playground {x}: mex over the two-move openings from x.
  Grundy after_first_move(Vertex x);
  Grundy start_value();
  Verdict verdict();

  const CaterpillarSpec& spec() const { return spec_; }

 private:
  // Backbone vertex a foot hangs from, or nullopt for backbone vertices.
  std::optional<std::size_t> foot_owner(Vertex x) const;

  CaterpillarSpec spec_;
  std::vector<Vertex> foot_start_;
  std::vector<Grundy> left_;
  std::vector<Grundy> right_;
};

Verdict caterpillar_connected_winner(const CaterpillarSpec& spec);

}  // namespace p3
