#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace p3 {

using Vertex = std::uint32_t;

// Fixed-universe bit set over the vertex ids [0, universe). Universes of up to
// 64 vertices live in a single inline word; larger ones spill to the heap.
class VertexSet {
 public:
  static constexpr std::size_t kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe) {
    if (universe_ > kWordBits) heap_.assign(word_count(), 0);
  }
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
      : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t w = 0; w < s.word_count(); ++w) s.data()[w] = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  std::size_t universe() const { return universe_; }
  std::size_t word_count() const { return (universe_ + kWordBits - 1) / kWordBits; }
  bool is_inline() const { return universe_ <= kWordBits; }

  bool contains(Vertex v) const {
    return v < universe_ && ((data()[v / kWordBits] >> (v % kWordBits)) & 1u);
  }
  void insert(Vertex v) {
    check(v);
    data()[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
  }
  void erase(Vertex v) {
    check(v);
    data()[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
  }
  VertexSet with(Vertex v) const {
    VertexSet r = *this;
    r.insert(v);
    return r;
  }

  std::size_t size() const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < word_count(); ++w) c += std::popcount(data()[w]);
    return c;
  }
  bool empty() const {
    for (std::size_t w = 0; w < word_count(); ++w)
      if (data()[w] != 0) return false;
    return true;
  }

  // |this ∩ other| without materializing the intersection.
  std::size_t intersection_size(const VertexSet& other) const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < word_count(); ++w) c += std::popcount(data()[w] & other.data()[w]);
    return c;
  }
  bool is_subset_of(const VertexSet& other) const {
    for (std::size_t w = 0; w < word_count(); ++w)
      if ((data()[w] & ~other.data()[w]) != 0) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t w = 0; w < word_count(); ++w) data()[w] |= o.data()[w];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t w = 0; w < word_count(); ++w) data()[w] &= o.data()[w];
    return *this;
  }
  // Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t w = 0; w < word_count(); ++w) data()[w] &= ~o.data()[w];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const { return full(universe_) - *this; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    if (a.universe_ != b.universe_) return false;
    for (std::size_t w = 0; w < a.word_count(); ++w)
      if (a.data()[w] != b.data()[w]) return false;
    return true;
  }

  // Lowest member, or universe() when empty.
  Vertex first() const { return next_from(0); }
  // Lowest member >= v, or universe() when none.
  Vertex next_from(std::size_t v) const {
    if (v >= universe_) return static_cast<Vertex>(universe_);
    std::size_t w = v / kWordBits;
    std::uint64_t bits = data()[w] & (~std::uint64_t{0} << (v % kWordBits));
    while (true) {
      if (bits != 0) return static_cast<Vertex>(w * kWordBits + std::countr_zero(bits));
      if (++w >= word_count()) return static_cast<Vertex>(universe_);
      bits = data()[w];
    }
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < word_count(); ++w) {
      std::uint64_t bits = data()[w];
      while (bits != 0) {
        fn(static_cast<Vertex>(w * kWordBits + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  std::uint64_t word(std::size_t w) const { return data()[w]; }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ universe_;
    for (std::size_t w = 0; w < word_count(); ++w) {
      h ^= data()[w] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

 private:
  std::uint64_t* data() { return is_inline() ? &inline_ : heap_.data(); }
  const std::uint64_t* data() const { return is_inline() ? &inline_ : heap_.data(); }

  void check(Vertex v) const {
    if (v >= universe_) throw std::out_of_range("vertex id outside the set universe");
  }
  void trim() {
    if (universe_ % kWordBits != 0 && universe_ > 0)
      data()[word_count() - 1] &= (std::uint64_t{1} << (universe_ % kWordBits)) - 1;
  }

  std::size_t universe_ = 0;
  std::uint64_t inline_ = 0;
  std::vector<std::uint64_t> heap_;
};

}  // namespace p3

template <>
struct std::hash<p3::VertexSet> {
  std::size_t operator()(const p3::VertexSet& s) const noexcept { return s.hash(); }
};
