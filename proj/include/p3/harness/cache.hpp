#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "p3/graph.hpp"
#include "p3/grundy.hpp"

namespace p3 {

// Append-only verdict store, one JSON object per line in <dir>/verdicts.jsonl:
//   {"hash": "<16 hex>", "variant": "free"|"connected", "verdict": {...}}
// A stored verdict is never replaced; storing a different verdict for the same
// key throws std::logic_error.
class ResultCache {
 public:
  // Creates the directory if needed and loads existing lines. Throws
  // std::runtime_error on an unreadable or corrupt cache file.
  explicit ResultCache(const std::filesystem::path& dir);

  std::optional<Verdict> lookup(const std::string& graph_hash, Variant v) const;
  void store(const std::string& graph_hash, Variant v, const Verdict& verdict);

  std::size_t size() const { return entries_.size(); }
  const std::filesystem::path& file() const { return file_; }

 private:
  std::filesystem::path file_;
  std::map<std::pair<std::string, Variant>, Verdict> entries_;
};

struct CachedDecideStats {
  std::size_t hits = 0;
  std::size_t misses = 0;
  std::size_t audits = 0;
};

// Verdict through the cache. Every `audit_period`-th hit is recomputed and
// compared against the stored verdict; a disagreement throws std::logic_error.
// audit_period = 0 disables auditing.
Verdict cached_decide(ResultCache& cache, const Graph& g, Variant v, const EngineOptions& options,
                      CachedDecideStats& stats, std::size_t audit_period = 16);

}  // namespace p3
