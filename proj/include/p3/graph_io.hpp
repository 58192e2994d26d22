#pragma once

#include <string>
#include <string_view>

#include "p3/generators.hpp"
#include "p3/graph.hpp"

namespace p3 {

// {"n": <int>, "edges": [[u,v], ...]}. Parse errors are thrown as GraphError with
// a kind per failure: malformed JSON, out-of-range id, self-loop, duplicate edge.
Graph parse_graph(std::string_view text);
// Compact form with u < v and edges sorted lexicographically.
std::string emit_graph(const Graph& g);

// Nested {"op": "join"|"union", "children": [...]} with integer leaves. Nodes
// nested under a parent of the same tag are merged on parse.
Cotree parse_cotree(std::string_view text);
std::string emit_cotree(const Cotree& c);

// {"backbone": n, "feet": [h1, ..., hn]}
CaterpillarSpec parse_caterpillar(std::string_view text);
std::string emit_caterpillar(const CaterpillarSpec& spec);

// 64-bit FNV-1a of the emitted graph JSON, as 16 hex digits.
std::string graph_hash(const Graph& g);

}  // namespace p3
