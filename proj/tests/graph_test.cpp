#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "p3/generators.hpp"
#include "p3/graph.hpp"
#include "p3/graph_io.hpp"
#include "support/reference.hpp"

namespace p3 {
namespace {

std::vector<std::size_t> degrees(const Graph& g) {
  std::vector<std::size_t> d;
  for (Vertex v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

TEST(Generators, PathExamples) {
  EXPECT_EQ(make_path(1).vertex_count(), 1u);
  EXPECT_EQ(make_path(1).edge_count(), 0u);
  EXPECT_EQ(make_path(2).edges(), (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(make_path(4).edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
}

TEST(Generators, CycleStarClique) {
  EXPECT_EQ(make_cycle(3), make_clique(3));
  EXPECT_EQ(make_cycle(5).edge_count(), 5u);
  EXPECT_EQ(degrees(make_cycle(7)), std::vector<std::size_t>(7, 2));

  const Graph s = make_star(4);
  EXPECT_EQ(s.vertex_count(), 5u);
  EXPECT_EQ(s.degree(0), 4u);
  EXPECT_EQ(make_star(0).vertex_count(), 1u);
  EXPECT_EQ(degrees(make_star(2)), degrees(make_path(3)));

  EXPECT_EQ(make_clique(4).edge_count(), 6u);
  EXPECT_EQ(make_clique(1).edge_count(), 0u);
}

TEST(Generators, RejectsBadParameters) {
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const GraphError& e) {
      return e.kind();
    }
    return GraphErrorKind::kMalformedJson;
  };
  EXPECT_EQ(kind_of([] { make_path(0); }), GraphErrorKind::kInvalidParameter);
  EXPECT_EQ(kind_of([] { make_cycle(2); }), GraphErrorKind::kInvalidParameter);
  EXPECT_EQ(kind_of([] { make_clique(0); }), GraphErrorKind::kInvalidParameter);
  EXPECT_EQ(kind_of([] { make_ladder(0); }), GraphErrorKind::kInvalidParameter);
}

TEST(Generators, LadderExamples) {
  EXPECT_EQ(make_ladder(1), make_path(2));
  const Graph l2 = make_ladder(2);
  EXPECT_EQ(degrees(l2), std::vector<std::size_t>(4, 2));
  EXPECT_TRUE(is_connected(l2));
  const Graph l3 = make_ladder(3);
  EXPECT_EQ(l3.vertex_count(), 6u);
  EXPECT_EQ(l3.edge_count(), 7u);
  EXPECT_TRUE(l3.adjacent(1, 4));
  EXPECT_TRUE(l3.adjacent(3, 4));
  EXPECT_FALSE(l3.adjacent(2, 3));
}

TEST(Generators, LadderCounts) {
  for (std::size_t n = 1; n <= 100; ++n) {
    const Graph l = make_ladder(n);
    EXPECT_EQ(l.vertex_count(), 2 * n);
    EXPECT_EQ(l.edge_count(), 3 * n - 2);
  }
}

TEST(Generators, CaterpillarExamples) {
  const Graph k13 = make_caterpillar({3, {0, 1, 0}});
  EXPECT_EQ(degrees(k13), degrees(make_star(3)));
  EXPECT_EQ(k13.degree(1), 3u);
  EXPECT_TRUE(k13.adjacent(1, 3));

  const CaterpillarSpec broom{4, {1, 0, 0, 2}};
  const Graph g = make_caterpillar(broom);
  EXPECT_EQ(g.vertex_count(), 7u);
  EXPECT_EQ(broom.first_foot(0), 4u);
  EXPECT_EQ(broom.first_foot(3), 5u);
  EXPECT_TRUE(g.adjacent(0, 4));
  EXPECT_TRUE(g.adjacent(3, 5));
  EXPECT_TRUE(g.adjacent(3, 6));

  EXPECT_FALSE((CaterpillarSpec{2, {1}}).validate().empty());
  EXPECT_THROW(make_caterpillar(CaterpillarSpec{2, {1}}), GraphError);
}

TEST(Generators, CaterpillarWithoutFeetIsPath) {
  for (std::size_t n = 1; n <= 20; ++n)
    EXPECT_EQ(make_caterpillar({n, std::vector<std::size_t>(n, 0)}), make_path(n)) << n;
}

TEST(Generators, CographExamples) {
  using C = Cotree;
  const C k4 = C::make_join({C::make_leaf(0), C::make_leaf(1), C::make_leaf(2), C::make_leaf(3)});
  EXPECT_EQ(make_cograph(k4), make_clique(4));

  const Graph empty = make_cograph(C::make_union({C::make_leaf(0), C::make_leaf(1), C::make_leaf(2)}));
  EXPECT_EQ(empty.vertex_count(), 3u);
  EXPECT_EQ(empty.edge_count(), 0u);

  const Graph p = make_cograph(C::make_join({C::make_union({C::make_leaf(0), C::make_leaf(1)}), C::make_leaf(2)}));
  EXPECT_EQ(p.edges(), (std::vector<Edge>{{0, 2}, {1, 2}}));
}

TEST(Generators, CotreeValidation) {
  using C = Cotree;
  EXPECT_TRUE(validate(C::make_leaf(0)).empty());
  EXPECT_FALSE(validate(C::make_join({C::make_leaf(0)})).empty());
  EXPECT_FALSE(validate(C::make_join({C::make_leaf(0), C::make_leaf(0)})).empty());
  EXPECT_FALSE(validate(C::make_join({C::make_leaf(0), C::make_leaf(2)})).empty());
  EXPECT_FALSE(
      validate(C::make_join({C::make_leaf(0), C::make_join({C::make_leaf(1), C::make_leaf(2)})})).empty());
  const C merged = canonicalize(C::make_join({C::make_leaf(0), C::make_join({C::make_leaf(1), C::make_leaf(2)})}));
  EXPECT_TRUE(validate(merged).empty());
  EXPECT_EQ(merged.children.size(), 3u);
}

TEST(Generators, CographsHaveNoInducedP4) {
  Rng rng(7);
  for (int i = 0; i < 60; ++i) {
    const Cotree c = random_cotree(static_cast<std::size_t>(rng.between(1, 12)), rng);
    ASSERT_TRUE(validate(c).empty());
    EXPECT_FALSE(reference::has_induced_p4(make_cograph(c))) << emit_cotree(c);
  }
  EXPECT_TRUE(reference::has_induced_p4(make_path(4)));
}

TEST(Generators, OutputsPassValidator) {
  std::vector<Graph> all;
  for (std::size_t n = 1; n <= 12; ++n) {
    all.push_back(make_path(n));
    all.push_back(make_clique(n));
    all.push_back(make_ladder(n));
    all.push_back(make_star(n));
    if (n >= 3) all.push_back(make_cycle(n));
  }
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    all.push_back(random_tree(static_cast<std::size_t>(rng.between(1, 20)), rng));
    all.push_back(make_caterpillar(random_caterpillar_spec(20, rng)));
    all.push_back(make_cograph(random_cotree(static_cast<std::size_t>(rng.between(1, 12)), rng)));
    all.push_back(random_biconnected_chordal(static_cast<std::size_t>(rng.between(3, 12)), rng));
  }
  for (std::size_t n = 1; n <= 5; ++n)
    for (const Graph& g : all_unlabeled_graphs(n)) all.push_back(g);
  for (const Graph& g : all) EXPECT_EQ(validate(g), "") << emit_graph(g);
}

TEST(Generators, RandomFamiliesHaveTheirShape) {
  Rng rng(3);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.between(1, 25));
    const Graph t = random_tree(n, rng);
    EXPECT_EQ(t.vertex_count(), n);
    EXPECT_EQ(t.edge_count(), n - 1);
    EXPECT_TRUE(is_connected(t));

    const CaterpillarSpec spec = random_caterpillar_spec(14, rng);
    EXPECT_EQ(spec.validate(), "");
    EXPECT_LE(spec.vertex_count(), 14u);

    const Graph c = random_biconnected_chordal(static_cast<std::size_t>(rng.between(3, 12)), rng);
    EXPECT_TRUE(reference::is_chordal(c));
    EXPECT_TRUE(reference::is_biconnected(c));
  }
  EXPECT_FALSE(reference::is_chordal(make_cycle(4)));
}

TEST(Generators, Determinism) {
  Rng a(99), b(99);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(emit_graph(random_tree(12, a)), emit_graph(random_tree(12, b)));
}

TEST(Enumeration, TreeCounts) {
  const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (std::size_t n = 1; n <= expected.size(); ++n) {
    const auto trees = all_unlabeled_trees(n);
    EXPECT_EQ(trees.size(), expected[n - 1]) << n;
    for (const Graph& t : trees) {
      EXPECT_EQ(t.edge_count(), n - 1);
      EXPECT_TRUE(is_connected(t));
    }
  }
}

TEST(Enumeration, GraphCounts) {
  const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156, 1044};
  for (std::size_t n = 1; n <= expected.size(); ++n) EXPECT_EQ(all_unlabeled_graphs(n).size(), expected[n - 1]) << n;
}

TEST(GraphCore, Components) {
  const Graph g = disjoint_union(make_path(3), make_cycle(4));
  const auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0].to_vector(), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(comps[1].to_vector(), (std::vector<Vertex>{3, 4, 5, 6}));
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(induces_connected(g, VertexSet(7, {3, 4})));
  EXPECT_FALSE(induces_connected(g, VertexSet(7, {0, 2})));
  EXPECT_TRUE(induces_connected(g, g.empty_set()));
  EXPECT_EQ(connected_components(g, VertexSet(7, {0, 2, 3})).size(), 3u);
  EXPECT_EQ(induced_subgraph(g, {3, 4, 5, 6}), make_cycle(4));
}

TEST(GraphCore, ConstructorRejectsBadEdges) {
  EXPECT_THROW(Graph(2, {{0, 2}}), GraphError);
  EXPECT_THROW(Graph(2, {{1, 1}}), GraphError);
  EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), GraphError);
  EXPECT_EQ(Graph(2, {{1, 0}}), make_path(2));
}

GraphErrorKind parse_kind(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const GraphError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "accepted: " << text;
  return GraphErrorKind::kInvalidParameter;
}

TEST(GraphIo, ParseExamples) {
  EXPECT_EQ(parse_graph(R"({"n":2,"edges":[[0,1]]})"), make_path(2));
  const Graph single = parse_graph(R"({"n":1,"edges":[]})");
  EXPECT_EQ(single.vertex_count(), 1u);
  EXPECT_EQ(single.edge_count(), 0u);
}

TEST(GraphIo, DistinctDiagnostics) {
  EXPECT_EQ(parse_kind(R"({"n":2,"edges":[[0,0]]})"), GraphErrorKind::kSelfLoop);
  EXPECT_EQ(parse_kind(R"({"n":2,"edges":[[0,2]]})"), GraphErrorKind::kOutOfRange);
  EXPECT_EQ(parse_kind(R"({"n":2,"edges":[[0,1],[1,0]]})"), GraphErrorKind::kDuplicateEdge);
  EXPECT_EQ(parse_kind(R"({"n":2,"edges":[[0,1)"), GraphErrorKind::kMalformedJson);
  EXPECT_EQ(parse_kind(R"({"edges":[]})"), GraphErrorKind::kMalformedJson);
  EXPECT_EQ(parse_kind(R"({"n":-1,"edges":[]})"), GraphErrorKind::kMalformedJson);
  EXPECT_EQ(parse_kind(R"({"n":2,"edges":[[0]]})"), GraphErrorKind::kMalformedJson);
  EXPECT_EQ(parse_kind("[]"), GraphErrorKind::kMalformedJson);
}

TEST(GraphIo, EmitIsSortedAndCompact) {
  const Graph g(3, {{2, 1}, {0, 2}});
  EXPECT_EQ(emit_graph(g), R"({"n":3,"edges":[[0,2],[1,2]]})");
}

TEST(GraphIo, RoundTrip) {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.between(1, 16));
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng.below(3) == 0) edges.emplace_back(rng.coin() ? Edge{u, v} : Edge{v, u});
    const Graph g(n, edges);
    EXPECT_EQ(parse_graph(emit_graph(g)), g);
  }
  for (std::size_t n = 1; n <= 5; ++n)
    for (const Graph& g : all_unlabeled_graphs(n)) EXPECT_EQ(parse_graph(emit_graph(g)), g);
}

TEST(GraphIo, HashDependsOnStructure) {
  EXPECT_EQ(graph_hash(make_cycle(5)), graph_hash(parse_graph(emit_graph(make_cycle(5)))));
  EXPECT_NE(graph_hash(make_cycle(5)), graph_hash(make_path(5)));
  EXPECT_EQ(graph_hash(make_path(3)).size(), 16u);
}

TEST(GraphIo, CotreeAndCaterpillar) {
  const Cotree c = parse_cotree(R"({"op":"join","children":[0,{"op":"join","children":[1,2]}]})");
  EXPECT_EQ(c.children.size(), 3u);
  EXPECT_EQ(make_cograph(c), make_clique(3));
  EXPECT_EQ(parse_cotree(emit_cotree(c)), c);
  EXPECT_THROW(parse_cotree(R"({"op":"meet","children":[0,1]})"), std::exception);
  EXPECT_THROW(parse_cotree(R"({"op":"join","children":[0,0]})"), std::exception);

  const CaterpillarSpec s = parse_caterpillar(R"({"backbone":3,"feet":[0,1,0]})");
  EXPECT_EQ(s.backbone, 3u);
  EXPECT_EQ(s.feet, (std::vector<std::size_t>{0, 1, 0}));
  EXPECT_EQ(emit_caterpillar(s), R"({"backbone":3,"feet":[0,1,0]})");
  EXPECT_THROW(parse_caterpillar(R"({"backbone":3,"feet":[0,1]})"), std::exception);
}

TEST(VertexSet, MatchesSetModel) {
  Rng rng(17);
  for (std::size_t universe : {5u, 64u, 65u, 130u}) {
    for (int round = 0; round < 20; ++round) {
      VertexSet a(universe), b(universe);
      std::set<Vertex> ma, mb;
      for (int i = 0; i < 40; ++i) {
        const Vertex x = static_cast<Vertex>(rng.below(universe));
        const Vertex y = static_cast<Vertex>(rng.below(universe));
        a.insert(x), ma.insert(x);
        b.insert(y), mb.insert(y);
        if (rng.below(4) == 0) a.erase(y), ma.erase(y);
      }
      EXPECT_EQ(a.size(), ma.size());
      EXPECT_EQ(a.to_vector(), std::vector<Vertex>(ma.begin(), ma.end()));
      std::set<Vertex> both;
      std::ranges::set_intersection(ma, mb, std::inserter(both, both.end()));
      EXPECT_EQ((a & b).to_vector(), std::vector<Vertex>(both.begin(), both.end()));
      EXPECT_EQ(a.intersection_size(b), both.size());
      EXPECT_EQ((a | b).size(), ma.size() + mb.size() - both.size());
      EXPECT_EQ((a - b).size(), ma.size() - both.size());
      EXPECT_TRUE((a & b).is_subset_of(a));
      EXPECT_EQ(a.complement().size(), universe - ma.size());
      EXPECT_EQ(a.first(), ma.empty() ? universe : *ma.begin());
    }
  }
  EXPECT_EQ(VertexSet::full(130).size(), 130u);
  EXPECT_THROW(VertexSet(3).insert(3), std::out_of_range);
}

}  // namespace
}  // namespace p3
