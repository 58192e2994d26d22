#include "p3/harness/cache.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"
#include "p3/graph_io.hpp"
#include "p3/harness/verdict_json.hpp"

namespace p3 {
namespace {

Variant parse_variant(const std::string& s) {
  if (s == "free") return Variant::kFree;
  if (s == "connected") return Variant::kConnected;
  throw std::runtime_error("cache line has unknown variant '" + s + "'");
}

}  // namespace

ResultCache::ResultCache(const std::filesystem::path& dir) : file_(dir / "verdicts.jsonl") {
  std::filesystem::create_directories(dir);
  std::ifstream in(file_);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      const auto key = std::make_pair(j.at("hash").get<std::string>(), parse_variant(j.at("variant").get<std::string>()));
      const Verdict v = verdict_from_json(j.at("verdict"));
      auto [it, inserted] = entries_.emplace(key, v);
      if (!inserted && !(it->second == v)) throw std::runtime_error("conflicting verdicts for one key");
    } catch (const std::exception& e) {
      throw std::runtime_error(file_.string() + ":" + std::to_string(line_no) + ": corrupt cache line: " + e.what());
    }
  }
}

std::optional<Verdict> ResultCache::lookup(const std::string& graph_hash, Variant v) const {
  auto it = entries_.find({graph_hash, v});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::store(const std::string& graph_hash, Variant v, const Verdict& verdict) {
  auto [it, inserted] = entries_.emplace(std::make_pair(graph_hash, v), verdict);
  if (!inserted) {
    if (!(it->second == verdict)) throw std::logic_error("cache already holds a different verdict for " + graph_hash);
    return;
  }
  nlohmann::ordered_json line;
  line["hash"] = graph_hash;
  line["variant"] = std::string(to_string(v));
  line["verdict"] = verdict_to_json(verdict);
  std::ofstream out(file_, std::ios::app);
  out << line.dump() << '\n';
  if (!out) throw std::runtime_error("cannot append to " + file_.string());
}

Verdict cached_decide(ResultCache& cache, const Graph& g, Variant v, const EngineOptions& options,
                      CachedDecideStats& stats, std::size_t audit_period) {
  const std::string key = graph_hash(g);
  if (auto hit = cache.lookup(key, v)) {
    ++stats.hits;
    if (audit_period != 0 && stats.hits % audit_period == 0) {
      ++stats.audits;
      if (!(decide(g, v, options) == *hit)) throw std::logic_error("cached verdict for " + key + " fails audit");
    }
    return *hit;
  }
  ++stats.misses;
  const Verdict fresh = decide(g, v, options);
  cache.store(key, v, fresh);
  return fresh;
}

}  // namespace p3
