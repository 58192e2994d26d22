#include "p3/generators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace p3 {
namespace {

[[noreturn]] void bad_parameter(const std::string& what) {
  throw GraphError(GraphErrorKind::kInvalidParameter, what);
}

}  // namespace

Graph make_path(std::size_t n) {
  if (n == 0) bad_parameter("path needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph make_cycle(std::size_t n) {
  if (n < 3) bad_parameter("cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph(n, edges);
}

Graph make_star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, edges);
}

Graph make_clique(std::size_t n) {
  if (n == 0) bad_parameter("clique needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph make_ladder(std::size_t rungs) {
  if (rungs == 0) bad_parameter("ladder needs at least one rung");
  const auto n = static_cast<Vertex>(rungs);
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) {
    edges.emplace_back(i, i + 1);
    edges.emplace_back(n + i, n + i + 1);
  }
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, n + i);
  return Graph(2 * rungs, edges);
}

std::size_t CaterpillarSpec::vertex_count() const {
  return backbone + std::accumulate(feet.begin(), feet.end(), std::size_t{0});
}

std::string CaterpillarSpec::validate() const {
  if (backbone == 0) return "caterpillar backbone must have at least one vertex";
  if (feet.size() != backbone) {
    std::ostringstream os;
    os << "caterpillar has " << feet.size() << " foot counts for a backbone of " << backbone;
    return os.str();
  }
  return {};
}

Vertex CaterpillarSpec::first_foot(std::size_t i) const {
  std::size_t id = backbone;
  for (std::size_t j = 0; j < i; ++j) id += feet[j];
  return static_cast<Vertex>(id);
}

Graph make_caterpillar(const CaterpillarSpec& spec) {
  if (auto err = spec.validate(); !err.empty()) bad_parameter(err);
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < spec.backbone; ++i) edges.emplace_back(i, i + 1);
  auto next = static_cast<Vertex>(spec.backbone);
  for (Vertex i = 0; i < spec.backbone; ++i)
    for (std::size_t f = 0; f < spec.feet[i]; ++f) edges.emplace_back(i, next++);
  return Graph(spec.vertex_count(), edges);
}

std::size_t Cotree::leaf_count() const {
  if (is_leaf()) return 1;
  std::size_t c = 0;
  for (const auto& child : children) c += child.leaf_count();
  return c;
}

std::vector<Vertex> Cotree::leaves() const {
  std::vector<Vertex> out;
  std::function<void(const Cotree&)> walk = [&](const Cotree& t) {
    if (t.is_leaf()) {
      out.push_back(t.leaf);
      return;
    }
    for (const auto& child : t.children) walk(child);
  };
  walk(*this);
  return out;
}

std::string validate(const Cotree& c) {
  std::string err;
  std::function<void(const Cotree&)> walk = [&](const Cotree& t) {
    if (!err.empty() || t.is_leaf()) return;
    if (t.children.size() < 2) {
      err = "cotree internal node has fewer than two children";
      return;
    }
    for (const auto& child : t.children) {
      if (!child.is_leaf() && child.kind == t.kind) {
        err = "cotree tags do not alternate";
        return;
      }
      walk(child);
    }
  };
  walk(c);
  if (!err.empty()) return err;
  auto leaves = c.leaves();
  std::sort(leaves.begin(), leaves.end());
  for (Vertex i = 0; i < leaves.size(); ++i)
    if (leaves[i] != i) return "cotree leaves must be exactly 0..k-1 without repeats";
  return {};
}

Cotree canonicalize(Cotree c) {
  if (c.is_leaf()) return c;
  std::vector<Cotree> flat;
  for (auto& child : c.children) {
    Cotree k = canonicalize(std::move(child));
    if (!k.is_leaf() && k.kind == c.kind) {
      for (auto& grandchild : k.children) flat.push_back(std::move(grandchild));
    } else {
      flat.push_back(std::move(k));
    }
  }
  if (flat.size() == 1) return std::move(flat.front());
  c.children = std::move(flat);
  return c;
}

Graph make_cograph(const Cotree& c) {
  if (auto err = validate(c); !err.empty()) bad_parameter(err);
  std::vector<Edge> edges;
  std::function<void(const Cotree&)> walk = [&](const Cotree& t) {
    if (t.is_leaf()) return;
    for (const auto& child : t.children) walk(child);
    if (t.kind != Cotree::Kind::kJoin) return;
    std::vector<std::vector<Vertex>> parts;
    for (const auto& child : t.children) parts.push_back(child.leaves());
    for (std::size_t a = 0; a < parts.size(); ++a)
      for (std::size_t b = a + 1; b < parts.size(); ++b)
        for (Vertex u : parts[a])
          for (Vertex v : parts[b]) edges.emplace_back(u, v);
  };
  walk(c);
  return Graph(c.leaf_count(), edges);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below needs a positive bound");
  // Rejection sampling keeps the draw exactly uniform.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

Graph random_tree(std::size_t n, Rng& rng) {
  if (n == 0) bad_parameter("tree needs at least one vertex");
  if (n <= 2) return make_path(n);
  std::vector<Vertex> code(n - 2);
  for (auto& x : code) x = static_cast<Vertex>(rng.below(n));
  std::vector<std::size_t> degree(n, 1);
  for (Vertex x : code) ++degree[x];
  std::vector<Edge> edges;
  for (Vertex x : code) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, x);
    --degree[leaf];
    --degree[x];
  }
  std::vector<Vertex> last;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) last.push_back(v);
  edges.emplace_back(last[0], last[1]);
  return Graph(n, edges);
}

CaterpillarSpec random_caterpillar_spec(std::size_t max_vertices, Rng& rng) {
  if (max_vertices == 0) bad_parameter("caterpillar needs at least one vertex");
  CaterpillarSpec spec;
  spec.backbone = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(max_vertices)));
  spec.feet.assign(spec.backbone, 0);
  const auto total_feet = rng.between(0, static_cast<std::int64_t>(max_vertices - spec.backbone));
  for (std::int64_t f = 0; f < total_feet; ++f) ++spec.feet[rng.below(spec.backbone)];
  return spec;
}

namespace {

Cotree random_cotree_shape(std::size_t leaves, Cotree::Kind kind, Rng& rng) {
  if (leaves == 1) return Cotree::make_leaf(0);
  const auto parts = static_cast<std::size_t>(rng.between(2, static_cast<std::int64_t>(std::min<std::size_t>(leaves, 4))));
  std::vector<std::size_t> sizes(parts, 1);
  for (std::size_t extra = leaves - parts; extra > 0; --extra) ++sizes[rng.below(parts)];
  const auto other = kind == Cotree::Kind::kJoin ? Cotree::Kind::kUnion : Cotree::Kind::kJoin;
  Cotree node{kind, 0, {}};
  for (std::size_t s : sizes) node.children.push_back(random_cotree_shape(s, other, rng));
  return node;
}

void relabel(Cotree& t, const std::vector<Vertex>& perm, Vertex& next) {
  if (t.is_leaf()) {
    t.leaf = perm[next++];
    return;
  }
  for (auto& child : t.children) relabel(child, perm, next);
}

}  // namespace

Cotree random_cotree(std::size_t leaves, Rng& rng) {
  if (leaves == 0) bad_parameter("cotree needs at least one leaf");
  const auto kind = rng.coin() ? Cotree::Kind::kJoin : Cotree::Kind::kUnion;
  Cotree t = random_cotree_shape(leaves, kind, rng);
  std::vector<Vertex> perm(leaves);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  for (std::size_t i = leaves; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  Vertex next = 0;
  relabel(t, perm, next);
  return t;
}

Graph random_biconnected_chordal(std::size_t n, Rng& rng) {
  if (n < 3) bad_parameter("biconnected chordal generator needs n >= 3");
  std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
  std::vector<std::set<Vertex>> adj(n);
  auto link = [&](Vertex u, Vertex v) {
    adj[u].insert(v);
    adj[v].insert(u);
  };
  link(0, 1);
  link(1, 2);
  link(0, 2);
  for (Vertex v = 3; v < n; ++v) {
    const auto a = static_cast<Vertex>(rng.below(v));
    std::vector<Vertex> na(adj[a].begin(), adj[a].end());
    const Vertex b = na[rng.below(na.size())];
    std::vector<Vertex> clique{a, b};
    while (true) {
      std::vector<Vertex> common;
      for (Vertex w = 0; w < v; ++w) {
        bool all = std::find(clique.begin(), clique.end(), w) == clique.end();
        for (Vertex c : clique) all = all && adj[w].count(c) > 0;
        if (all) common.push_back(w);
      }
      if (common.empty() || !rng.coin()) break;
      clique.push_back(common[rng.below(common.size())]);
    }
    for (Vertex c : clique) {
      link(v, c);
      edges.emplace_back(c, v);
    }
  }
  return Graph(n, edges);
}

namespace {

// AHU encoding of the tree rooted at `root`.
std::string rooted_code(const Graph& t, Vertex root, Vertex parent) {
  std::vector<std::string> parts;
  for (Vertex c : t.neighbors(root))
    if (c != parent) parts.push_back(rooted_code(t, c, root));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  return out + ")";
}

std::string tree_code(const Graph& t) {
  const std::size_t n = t.vertex_count();
  if (n <= 2) return std::to_string(n);
  // Strip leaves layer by layer to find the center(s).
  std::vector<std::size_t> degree(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex v : layer)
      for (Vertex w : t.neighbors(v))
        if (--degree[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::string best;
  for (Vertex c : layer) {
    auto code = rooted_code(t, c, static_cast<Vertex>(n));
    if (best.empty() || code < best) best = code;
  }
  return best;
}

// Canonical adjacency bitmask: minimum over relabelings that list vertices in
// nondecreasing order of a refinement invariant.
std::uint64_t graph_code(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::pair<std::vector<std::size_t>, Vertex>> keyed;
  for (Vertex v = 0; v < n; ++v) {
    std::vector<std::size_t> key{g.degree(v)};
    std::vector<std::size_t> nd;
    for (Vertex w : g.neighbors(v)) nd.push_back(g.degree(w));
    std::sort(nd.begin(), nd.end());
    key.insert(key.end(), nd.begin(), nd.end());
    keyed.emplace_back(std::move(key), v);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<Vertex> order;
  std::vector<std::size_t> class_start;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0 || keyed[i].first != keyed[i - 1].first) class_start.push_back(i);
    order.push_back(keyed[i].second);
  }
  class_start.push_back(n);

  std::uint64_t best = ~std::uint64_t{0};
  std::function<void(std::size_t)> permute = [&](std::size_t cls) {
    if (cls + 1 == class_start.size()) {
      std::uint64_t code = 0;
      std::size_t bit = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++bit)
          if (g.adjacent(order[i], order[j])) code |= std::uint64_t{1} << bit;
      best = std::min(best, code);
      return;
    }
    auto first = order.begin() + static_cast<std::ptrdiff_t>(class_start[cls]);
    auto last = order.begin() + static_cast<std::ptrdiff_t>(class_start[cls + 1]);
    std::sort(first, last);
    do {
      permute(cls + 1);
    } while (std::next_permutation(first, last));
  };
  permute(0);
  return best;
}

}  // namespace

std::vector<Graph> all_unlabeled_trees(std::size_t n) {
  if (n == 0) return {};
  std::vector<Graph> current{make_path(1)};
  for (std::size_t size = 2; size <= n; ++size) {
    std::map<std::string, Graph> next;
    for (const auto& t : current) {
      auto edges = t.edges();
      for (Vertex v = 0; v < t.vertex_count(); ++v) {
        auto grown = edges;
        grown.emplace_back(v, static_cast<Vertex>(t.vertex_count()));
        Graph g(size, grown);
        next.try_emplace(tree_code(g), std::move(g));
      }
    }
    current.clear();
    for (auto& [code, g] : next) current.push_back(std::move(g));
  }
  return current;
}

std::vector<Graph> all_unlabeled_graphs(std::size_t n) {
  if (n > 8) bad_parameter("graph enumeration is limited to 8 vertices");
  if (n == 0) return {Graph(0, {})};
  std::vector<Graph> current{Graph(1, {})};
  for (std::size_t size = 2; size <= n; ++size) {
    std::map<std::uint64_t, Graph> next;
    const auto fresh = static_cast<Vertex>(size - 1);
    for (const auto& g : current) {
      const auto base = g.edges();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (size - 1)); ++mask) {
        auto edges = base;
        for (Vertex v = 0; v < fresh; ++v)
          if ((mask >> v) & 1u) edges.emplace_back(v, fresh);
        Graph h(size, edges);
        next.try_emplace(graph_code(h), std::move(h));
      }
    }
    current.clear();
    for (auto& [code, g] : next) current.push_back(std::move(g));
  }
  return current;
}

}  // namespace p3
