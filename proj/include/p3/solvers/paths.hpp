#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "p3/grundy.hpp"

namespace p3 {

// Which ends of an unlabeled run of path vertices touch a labeled vertex.
struct PathBorder {
  bool left = false;
  bool right = false;

  std::size_t index() const { return (left ? 1u : 0u) | (right ? 2u : 0u); }
  friend bool operator==(const PathBorder&, const PathBorder&) = default;
};

inline constexpr std::array<PathBorder, 4> kAllBorders{
    PathBorder{false, false}, PathBorder{true, false}, PathBorder{false, true}, PathBorder{true, true}};

// Free-game Grundy values of unlabeled path runs, four border variants per
// length. Rows are built by increasing length; a move at run position j splits
// the run into at most two shorter runs, after the closure absorbs a vertex
// squeezed between the new label and a labeled border.
class FreePathTable {
 public:
  explicit FreePathTable(std::size_t max_length = 0) { extend(max_length); }

  // Adds rows up to max_length; existing rows are left untouched.
  void extend(std::size_t max_length);
  std::size_t max_length() const { return rows_.size() - 1; }

  // Value of a run of k vertices. k = 0 is the empty run. A single vertex
  // bordered on both sides is already inside the hull and therefore 0.
  Grundy value(std::size_t k, PathBorder border) const;

 private:
  Grundy compute(std::size_t k, PathBorder border) const;

  std::vector<std::array<Grundy, 4>> rows_{std::array<Grundy, 4>{0, 0, 0, 0}};
};

FreePathTable free_path_grundy_table(std::size_t n_max);

// Free game on C_n: even cycles fall to the mirror strategy, C_3 is a clique,
// odd n > 3 reduces to the run of n-1 vertices bordered on both sides.
Verdict free_cycle_winner(std::size_t n);

// Connected game on a path of n vertices with one endpoint labeled.
Grundy connected_path_f(std::size_t n);
Grundy connected_path_f_closed_form(std::size_t n);

// Connected game on P_n from the empty start.
Grundy connected_path_grundy(std::size_t n);
Grundy connected_path_grundy_closed_form(std::size_t n);

// Connected game on C_n: mex over the single first-move playground.
Grundy connected_cycle_grundy(std::size_t n);

// Value of a playground that is an arc of k labeled vertices on C_n, for
// k <= n-2 or k = n. An arc of n-1 vertices cannot occur; asking for it throws.
Grundy cycle_arc_value(std::size_t n, std::size_t k);

}  // namespace p3
