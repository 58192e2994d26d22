#pragma once

#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "p3/closure.hpp"
#include "p3/graph.hpp"

namespace p3 {

using Grundy = std::uint32_t;

// Smallest nonnegative integer absent from the values.
Grundy mex(std::span<const Grundy> values);
// Bitwise exclusive-or of the values; 0 for an empty sequence.
Grundy nim_sum(std::span<const Grundy> values);

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultBudget = 50'000'000;

// Memo of final Grundy values keyed by (labeled set, variant) for one graph.
// Safe for concurrent use; inserting a different value for a stored key is a
// logic error, inserting the same value again is a no-op.
class TranspositionTable {
 public:
  explicit TranspositionTable(std::size_t capacity = kDefaultBudget) : capacity_(capacity) {}

  std::optional<Grundy> find(const VertexSet& labeled, Variant v) const;
  // Throws ResourceLimitError once more than capacity() entries would be held.
  void insert(const VertexSet& labeled, Variant v, Grundy value);

  std::size_t size() const { return size_.load(std::memory_order_relaxed); }
  std::size_t capacity() const { return capacity_; }

  struct Entry {
    VertexSet labeled;
    Variant variant;
    Grundy value;
  };
  // Snapshot ordered by (variant, size, words) so iteration is reproducible.
  std::vector<Entry> entries() const;

 private:
  struct Key {
    VertexSet labeled;
    Variant variant;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return k.labeled.hash() * 2 + static_cast<std::size_t>(k.variant);
    }
  };
  static constexpr std::size_t kShards = 16;
  struct Shard {
    mutable std::mutex mutex;
    std::unordered_map<Key, Grundy, KeyHash> map;
  };
  Shard& shard_for(const Key& k) const { return shards_[KeyHash{}(k) % kShards]; }

  std::size_t capacity_;
  std::atomic<std::size_t> size_{0};
  mutable std::array<Shard, kShards> shards_;
};

enum class Winner { kFirst, kSecond };

struct Verdict {
  Winner winner = Winner::kSecond;
  std::optional<Grundy> grundy;
  std::optional<Vertex> witness;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct EngineOptions {
  std::size_t budget = kDefaultBudget;
  // Worker threads for the children of the root position.
  unsigned threads = 1;
  // Free variant only: evaluate graph components as independent summands.
  bool decompose = true;
};

// Exact memoized Grundy search over P3-game positions of one graph.
class Engine {
 public:
  Engine(const Graph& g, Variant v, EngineOptions options = {});
  // Shares an external table; the table must outlive the engine.
  Engine(const Graph& g, Variant v, TranspositionTable& table, EngineOptions options = {});
  Engine(Graph&&, Variant, EngineOptions = {}) = delete;
  Engine(Graph&&, Variant, TranspositionTable&, EngineOptions = {}) = delete;
  ~Engine();
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  const Graph& graph() const { return graph_; }
  Variant variant() const { return variant_; }

  // `labeled` must satisfy the Position invariants for this graph and variant.
  Grundy grundy(const VertexSet& labeled);
  Grundy grundy(const Position& p);

  // (move, Grundy value of the resulting position) for every legal move, in vertex order.
  std::vector<std::pair<Vertex, Grundy>> child_values(const VertexSet& labeled);

  // Lowest legal move reaching a zero position, else the lowest legal move.
  std::optional<Vertex> best_move(const VertexSet& labeled);

  Verdict decide();

  // Table of the undecomposed search; empty when the free game was split by component.
  const TranspositionTable& table() const { return *table_; }
  // Number of independent summands the engine evaluates (1 unless decomposed).
  std::size_t summand_count() const;

 private:
  struct Part;

  Grundy search(const VertexSet& labeled);
  Grundy root_value(const VertexSet& labeled);

  const Graph& graph_;
  Variant variant_;
  EngineOptions options_;
  std::unique_ptr<TranspositionTable> owned_table_;
  TranspositionTable* table_;
  std::vector<Part> parts_;
};

Grundy grundy(const Position& p, TranspositionTable& table);
Verdict decide(const Graph& g, Variant v, EngineOptions options = {});
std::optional<Vertex> best_move(const Position& p, EngineOptions options = {});

}  // namespace p3
