#pragma once

// Test-only reference implementations. They deliberately share no code with
// the library's closure and search paths: plain std::set positions, a rescan
// fixpoint for the hull and BFS for distances.

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "p3/closure.hpp"
#include "p3/generators.hpp"
#include "p3/graph.hpp"

namespace p3::reference {

using Adjacency = std::vector<std::vector<int>>;
using Labels = std::set<int>;

inline Adjacency adjacency(const Graph& g) {
  Adjacency adj(g.vertex_count());
  for (auto [u, v] : g.edges()) {
    adj[u].push_back(static_cast<int>(v));
    adj[v].push_back(static_cast<int>(u));
  }
  return adj;
}

inline int labeled_neighbors(const Adjacency& adj, int x, const Labels& s) {
  return static_cast<int>(std::count_if(adj[x].begin(), adj[x].end(), [&](int y) { return s.count(y) > 0; }));
}

inline bool is_closed(const Adjacency& adj, const Labels& s) {
  for (int x = 0; x < static_cast<int>(adj.size()); ++x)
    if (!s.count(x) && labeled_neighbors(adj, x, s) >= 2) return false;
  return true;
}

// Rescan fixpoint; `order` fixes the scan order of the vertices.
inline Labels hull(const Adjacency& adj, Labels s, const std::vector<int>& order) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x : order) {
      if (!s.count(x) && labeled_neighbors(adj, x, s) >= 2) {
        s.insert(x);
        changed = true;
      }
    }
  }
  return s;
}

inline Labels hull(const Adjacency& adj, Labels s) {
  std::vector<int> order(adj.size());
  for (int i = 0; i < static_cast<int>(order.size()); ++i) order[i] = i;
  return hull(adj, std::move(s), order);
}

// BFS distance from the set s to x; -1 when unreachable.
inline int distance(const Adjacency& adj, const Labels& s, int x) {
  std::vector<int> dist(adj.size(), -1);
  std::deque<int> queue;
  for (int v : s) {
    dist[v] = 0;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : adj[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist[x];
}

inline bool connected(const Adjacency& adj, const Labels& s) {
  if (s.empty()) return true;
  Labels seen{*s.begin()};
  std::vector<int> stack{*s.begin()};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (s.count(w) && seen.insert(w).second) stack.push_back(w);
  }
  return seen.size() == s.size();
}

inline std::vector<int> moves(const Adjacency& adj, const Labels& s, bool connected_variant) {
  std::vector<int> out;
  for (int x = 0; x < static_cast<int>(adj.size()); ++x) {
    if (s.count(x)) continue;
    if (connected_variant && !s.empty()) {
      const int d = distance(adj, s, x);
      if (d < 0 || d > 2) continue;
    }
    out.push_back(x);
  }
  return out;
}

// Plain recursive Grundy search with a std::map memo.
class BruteForce {
 public:
  BruteForce(const Graph& g, bool connected_variant) : adj_(adjacency(g)), connected_(connected_variant) {}

  unsigned grundy(const Labels& s) {
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    std::set<unsigned> seen;
    for (int x : moves(adj_, s, connected_)) {
      Labels next = s;
      next.insert(x);
      seen.insert(grundy(hull(adj_, next)));
    }
    unsigned m = 0;
    while (seen.count(m)) ++m;
    memo_[s] = m;
    return m;
  }
  unsigned start() { return grundy({}); }

 private:
  Adjacency adj_;
  bool connected_;
  std::map<Labels, unsigned> memo_;
};

inline Labels to_labels(const VertexSet& s) {
  Labels out;
  s.for_each([&](Vertex v) { out.insert(static_cast<int>(v)); });
  return out;
}

inline VertexSet to_set(std::size_t n, const Labels& s) {
  VertexSet out(n);
  for (int v : s) out.insert(static_cast<Vertex>(v));
  return out;
}

// Brute-force induced-P4 scan over all 4-subsets and orderings.
inline bool has_induced_p4(const Graph& g) {
  const int n = static_cast<int>(g.vertex_count());
  std::vector<int> q(4);
  for (q[0] = 0; q[0] < n; ++q[0])
    for (q[1] = q[0] + 1; q[1] < n; ++q[1])
      for (q[2] = q[1] + 1; q[2] < n; ++q[2])
        for (q[3] = q[2] + 1; q[3] < n; ++q[3]) {
          std::vector<int> p = q;
          do {
            if (p[0] > p[3]) continue;
            auto e = [&](int a, int b) { return g.adjacent(static_cast<Vertex>(p[a]), static_cast<Vertex>(p[b])); };
            if (e(0, 1) && e(1, 2) && e(2, 3) && !e(0, 2) && !e(1, 3) && !e(0, 3)) return true;
          } while (std::next_permutation(p.begin(), p.end()));
        }
  return false;
}

// Chordal iff repeatedly deleting a simplicial vertex empties the graph.
inline bool is_chordal(const Graph& g) {
  const auto adj = adjacency(g);
  Labels alive;
  for (int v = 0; v < static_cast<int>(adj.size()); ++v) alive.insert(v);
  while (!alive.empty()) {
    bool removed = false;
    for (int v : alive) {
      std::vector<int> nb;
      for (int w : adj[v])
        if (alive.count(w)) nb.push_back(w);
      bool clique = true;
      for (std::size_t i = 0; i < nb.size() && clique; ++i)
        for (std::size_t j = i + 1; j < nb.size() && clique; ++j)
          clique = g.adjacent(static_cast<Vertex>(nb[i]), static_cast<Vertex>(nb[j]));
      if (clique) {
        alive.erase(v);
        removed = true;
        break;
      }
    }
    if (!removed) return false;
  }
  return true;
}

// Connected, and still connected after deleting any single vertex.
inline bool is_biconnected(const Graph& g) {
  const auto adj = adjacency(g);
  const int n = static_cast<int>(adj.size());
  Labels all;
  for (int v = 0; v < n; ++v) all.insert(v);
  if (n < 3 || !connected(adj, all)) return false;
  for (int v = 0; v < n; ++v) {
    Labels rest = all;
    rest.erase(v);
    if (!connected(adj, rest)) return false;
  }
  return true;
}

}  // namespace p3::reference
