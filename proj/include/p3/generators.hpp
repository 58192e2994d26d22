#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "p3/graph.hpp"

namespace p3 {

// Vertex numbering used by every generator:
//   path, cycle    0..n-1 in order
//   star           center 0, leaves 1..t
//   ladder         rail A = 0..n-1, rail B = n..2n-1, rung i = (i, n+i)
//   caterpillar    backbone 0..n-1 first, then the feet grouped by backbone vertex
//   cograph        vertex id = leaf label of the cotree

Graph make_path(std::size_t n);
Graph make_cycle(std::size_t n);
Graph make_star(std::size_t leaves);
Graph make_clique(std::size_t n);
Graph make_ladder(std::size_t rungs);

struct CaterpillarSpec {
  std::size_t backbone = 1;
  std::vector<std::size_t> feet;  // feet[i] pendant leaves on backbone vertex i

  std::size_t vertex_count() const;
  // Empty string when valid.
  std::string validate() const;
  // First vertex id of the feet hanging from backbone vertex i.
  Vertex first_foot(std::size_t i) const;
};

Graph make_caterpillar(const CaterpillarSpec& spec);

struct Cotree {
  enum class Kind { kLeaf, kUnion, kJoin };

  Kind kind = Kind::kLeaf;
  Vertex leaf = 0;
  std::vector<Cotree> children;

  static Cotree make_leaf(Vertex v) { return Cotree{Kind::kLeaf, v, {}}; }
  static Cotree make_union(std::vector<Cotree> c) { return Cotree{Kind::kUnion, 0, std::move(c)}; }
  static Cotree make_join(std::vector<Cotree> c) { return Cotree{Kind::kJoin, 0, std::move(c)}; }

  bool is_leaf() const { return kind == Kind::kLeaf; }
  std::size_t leaf_count() const;
  std::vector<Vertex> leaves() const;

  friend bool operator==(const Cotree&, const Cotree&) = default;
};

// Structural check: internal nodes have >= 2 children, tags alternate along
// every root-leaf path, and the leaves are exactly 0..k-1. Empty string when valid.
std::string validate(const Cotree& c);

// Collapses single-child nodes and merges a child into a parent of the same tag.
Cotree canonicalize(Cotree c);

Graph make_cograph(const Cotree& c);

// Seeded generator with a platform-independent bounded draw, so random
// families are reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform integer in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

// Labeled tree from a uniformly random Prüfer sequence.
Graph random_tree(std::size_t n, Rng& rng);

// Random caterpillar with at most max_vertices vertices.
CaterpillarSpec random_caterpillar_spec(std::size_t max_vertices, Rng& rng);

// Random canonical cotree with exactly `leaves` leaves.
Cotree random_cotree(std::size_t leaves, Rng& rng);

// Biconnected chordal graph on n >= 3 vertices: starts from a triangle and
// repeatedly attaches a new vertex to a random clique of size >= 2.
Graph random_biconnected_chordal(std::size_t n, Rng& rng);

// One representative of every isomorphism class of trees with n vertices.
std::vector<Graph> all_unlabeled_trees(std::size_t n);

// One representative of every isomorphism class of graphs with n <= 8 vertices.
std::vector<Graph> all_unlabeled_graphs(std::size_t n);

}  // namespace p3
