#include "p3/grundy.hpp"

#include <algorithm>
#include <exception>
#include <string>
#include <thread>

namespace p3 {

Grundy mex(std::span<const Grundy> values) {
  std::vector<bool> seen(values.size() + 1, false);
  for (Grundy v : values)
    if (v < seen.size()) seen[v] = true;
  Grundy m = 0;
  while (seen[m]) ++m;
  return m;
}

Grundy nim_sum(std::span<const Grundy> values) {
  Grundy acc = 0;
  for (Grundy v : values) acc ^= v;
  return acc;
}

std::optional<Grundy> TranspositionTable::find(const VertexSet& labeled, Variant v) const {
  Key key{labeled, v};
  Shard& s = shard_for(key);
  std::lock_guard lock(s.mutex);
  auto it = s.map.find(key);
  if (it == s.map.end()) return std::nullopt;
  return it->second;
}

void TranspositionTable::insert(const VertexSet& labeled, Variant v, Grundy value) {
  Key key{labeled, v};
  Shard& s = shard_for(key);
  std::lock_guard lock(s.mutex);
  auto it = s.map.find(key);
  if (it != s.map.end()) {
    if (it->second != value) throw std::logic_error("transposition table entry would change value");
    return;
  }
  if (size_.load(std::memory_order_relaxed) >= capacity_) {
    throw ResourceLimitError("node budget of " + std::to_string(capacity_) +
                             " positions exceeded; instance too large for exhaustive search");
  }
  s.map.emplace(std::move(key), value);
  size_.fetch_add(1, std::memory_order_relaxed);
}

std::vector<TranspositionTable::Entry> TranspositionTable::entries() const {
  std::vector<Entry> out;
  for (const auto& s : shards_) {
    std::lock_guard lock(s.mutex);
    for (const auto& [k, v] : s.map) out.push_back({k.labeled, k.variant, v});
  }
  std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) {
    if (a.variant != b.variant) return a.variant < b.variant;
    for (std::size_t w = a.labeled.word_count(); w-- > 0;)
      if (a.labeled.word(w) != b.labeled.word(w)) return a.labeled.word(w) < b.labeled.word(w);
    return false;
  });
  return out;
}

struct Engine::Part {
  std::unique_ptr<Graph> graph;
  std::vector<Vertex> global_ids;
  std::unique_ptr<Engine> engine;
};

Engine::Engine(const Graph& g, Variant v, EngineOptions options)
    : graph_(g),
      variant_(v),
      options_(options),
      owned_table_(std::make_unique<TranspositionTable>(options.budget)),
      table_(owned_table_.get()) {
  if (variant_ != Variant::kFree || !options_.decompose) return;
  auto components = connected_components(g);
  if (components.size() < 2) return;
  EngineOptions sub = options_;
  sub.decompose = false;
  for (const auto& comp : components) {
    Part part;
    part.global_ids = comp.to_vector();
    part.graph = std::make_unique<Graph>(induced_subgraph(g, part.global_ids));
    part.engine = std::make_unique<Engine>(*part.graph, variant_, sub);
    parts_.push_back(std::move(part));
  }
}

Engine::Engine(const Graph& g, Variant v, TranspositionTable& table, EngineOptions options)
    : graph_(g), variant_(v), options_(options), table_(&table) {
  options_.decompose = false;
}

Engine::~Engine() = default;

std::size_t Engine::summand_count() const { return parts_.empty() ? 1 : parts_.size(); }

Grundy Engine::search(const VertexSet& labeled) {
  if (auto hit = table_->find(labeled, variant_)) return *hit;
  const VertexSet moves = legal_moves(graph_, labeled, variant_);
  std::vector<bool> seen(moves.size() + 1, false);
  moves.for_each([&](Vertex x) {
    const Grundy child = search(extend_hull(graph_, labeled, x));
    if (child < seen.size()) seen[child] = true;
  });
  Grundy value = 0;
  while (seen[value]) ++value;
  table_->insert(labeled, variant_, value);
  return value;
}

Grundy Engine::root_value(const VertexSet& labeled) {
  if (options_.threads <= 1) return search(labeled);
  if (auto hit = table_->find(labeled, variant_)) return *hit;
  const auto moves = legal_moves(graph_, labeled, variant_).to_vector();
  std::vector<Grundy> values(moves.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(options_.threads);
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < options_.threads; ++t) {
      workers.emplace_back([&, t] {
        try {
          for (std::size_t i; (i = next.fetch_add(1)) < moves.size();)
            values[i] = search(extend_hull(graph_, labeled, moves[i]));
        } catch (...) {
          errors[t] = std::current_exception();
          next.store(moves.size());
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  const Grundy value = mex(values);
  table_->insert(labeled, variant_, value);
  return value;
}

Grundy Engine::grundy(const VertexSet& labeled) {
  if (labeled.universe() != graph_.vertex_count())
    throw std::invalid_argument("labeled set universe does not match the graph");
  if (!is_p3_closed(graph_, labeled)) throw std::invalid_argument("labeled set is not P3-closed");
  if (variant_ == Variant::kConnected && !induces_connected(graph_, labeled))
    throw std::invalid_argument("connected-variant position must induce a connected subgraph");
  if (parts_.empty()) return root_value(labeled);
  Grundy total = 0;
  for (auto& part : parts_) {
    VertexSet local(part.global_ids.size());
    for (Vertex i = 0; i < part.global_ids.size(); ++i)
      if (labeled.contains(part.global_ids[i])) local.insert(i);
    total ^= part.engine->grundy(local);
  }
  return total;
}

Grundy Engine::grundy(const Position& p) {
  if (&p.graph() != &graph_ && !(p.graph() == graph_))
    throw std::invalid_argument("position belongs to a different graph");
  if (p.variant() != variant_) throw std::invalid_argument("position variant does not match the engine");
  return grundy(p.labeled());
}

std::vector<std::pair<Vertex, Grundy>> Engine::child_values(const VertexSet& labeled) {
  std::vector<std::pair<Vertex, Grundy>> out;
  legal_moves(graph_, labeled, variant_).for_each([&](Vertex x) {
    out.emplace_back(x, grundy(extend_hull(graph_, labeled, x)));
  });
  return out;
}

std::optional<Vertex> Engine::best_move(const VertexSet& labeled) {
  const auto children = child_values(labeled);
  if (children.empty()) return std::nullopt;
  for (auto [x, g] : children)
    if (g == 0) return x;
  return children.front().first;
}

Verdict Engine::decide() {
  if (graph_.vertex_count() == 0) throw std::invalid_argument("cannot decide the game on an empty graph");
  const VertexSet start = graph_.empty_set();
  Verdict v;
  v.grundy = grundy(start);
  v.winner = *v.grundy != 0 ? Winner::kFirst : Winner::kSecond;
  if (v.winner == Winner::kFirst) v.witness = best_move(start);
  return v;
}

Grundy grundy(const Position& p, TranspositionTable& table) {
  Engine engine(p.graph(), p.variant(), table);
  return engine.grundy(p.labeled());
}

Verdict decide(const Graph& g, Variant v, EngineOptions options) {
  Engine engine(g, v, options);
  return engine.decide();
}

std::optional<Vertex> best_move(const Position& p, EngineOptions options) {
  Engine engine(p.graph(), p.variant(), options);
  return engine.best_move(p.labeled());
}

}  // namespace p3
