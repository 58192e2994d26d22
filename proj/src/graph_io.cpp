#include "p3/graph_io.hpp"

#include <cstdint>
#include <cstdio>

#include "json.hpp"

namespace p3 {
namespace {

using nlohmann::json;

constexpr std::uint64_t kMaxVertices = std::uint64_t{1} << 20;

[[noreturn]] void malformed(const std::string& what) {
  throw GraphError(GraphErrorKind::kMalformedJson, what);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    malformed(std::string("malformed JSON: ") + e.what());
  }
}

std::uint64_t as_count(const json& j, const char* what) {
  if (!j.is_number_integer()) malformed(std::string(what) + " must be an integer");
  const auto v = j.get<std::int64_t>();
  if (v < 0) malformed(std::string(what) + " must be nonnegative");
  return static_cast<std::uint64_t>(v);
}

Cotree cotree_from_json(const json& j) {
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (v < 0) malformed("cotree leaf must be nonnegative");
    return Cotree::make_leaf(static_cast<Vertex>(v));
  }
  if (!j.is_object() || !j.contains("op") || !j.contains("children"))
    malformed("cotree node must be an integer leaf or an object with op and children");
  const auto& op = j.at("op");
  if (!op.is_string()) malformed("cotree op must be a string");
  Cotree node;
  if (op == "join") {
    node.kind = Cotree::Kind::kJoin;
  } else if (op == "union") {
    node.kind = Cotree::Kind::kUnion;
  } else {
    malformed("unknown cotree op '" + op.get<std::string>() + "'");
  }
  const auto& children = j.at("children");
  if (!children.is_array() || children.size() < 2) malformed("cotree node needs at least two children");
  for (const auto& c : children) node.children.push_back(cotree_from_json(c));
  return node;
}

nlohmann::ordered_json cotree_to_json(const Cotree& c) {
  if (c.is_leaf()) return c.leaf;
  nlohmann::ordered_json node;
  node["op"] = c.kind == Cotree::Kind::kJoin ? "join" : "union";
  node["children"] = nlohmann::ordered_json::array();
  for (const auto& child : c.children) node["children"].push_back(cotree_to_json(child));
  return node;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    malformed("graph must be an object with keys n and edges");
  const auto n = as_count(j.at("n"), "n");
  if (n > kMaxVertices) malformed("n exceeds the supported maximum of " + std::to_string(kMaxVertices));
  const auto& edges = j.at("edges");
  if (!edges.is_array()) malformed("edges must be an array");
  std::vector<Edge> list;
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) malformed("each edge must be a pair [u,v]");
    const auto u = as_count(e[0], "vertex id");
    const auto v = as_count(e[1], "vertex id");
    if (u >= n || v >= n) {
      throw GraphError(GraphErrorKind::kOutOfRange,
                       "edge [" + std::to_string(u) + "," + std::to_string(v) + "] references a vertex outside [0," +
                           std::to_string(n) + ")");
    }
    list.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph(n, list);
}

std::string emit_graph(const Graph& g) {
  nlohmann::ordered_json out;
  out["n"] = g.vertex_count();
  out["edges"] = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) out["edges"].push_back({u, v});
  return out.dump();
}

Cotree parse_cotree(std::string_view text) {
  Cotree c = canonicalize(cotree_from_json(parse_json(text)));
  if (auto err = validate(c); !err.empty()) malformed(err);
  return c;
}

std::string emit_cotree(const Cotree& c) { return cotree_to_json(c).dump(); }

CaterpillarSpec parse_caterpillar(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("backbone") || !j.contains("feet"))
    malformed("caterpillar must be an object with keys backbone and feet");
  CaterpillarSpec spec;
  spec.backbone = as_count(j.at("backbone"), "backbone");
  const auto& feet = j.at("feet");
  if (!feet.is_array()) malformed("feet must be an array");
  for (const auto& h : feet) spec.feet.push_back(as_count(h, "foot count"));
  if (auto err = spec.validate(); !err.empty()) throw GraphError(GraphErrorKind::kInvalidParameter, err);
  return spec;
}

std::string emit_caterpillar(const CaterpillarSpec& spec) {
  nlohmann::ordered_json out;
  out["backbone"] = spec.backbone;
  out["feet"] = spec.feet;
  return out.dump();
}

std::string graph_hash(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : emit_graph(g)) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace p3
