#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "locgame/generators.hpp"
#include "locgame/graph.hpp"
#include "locgame/graph6.hpp"
#include "oracles.hpp"

using namespace locgame;

TEST_CASE("graph6 decode anchors") {
  Graph k3 = parse_graph6("Bw");
  CHECK(k3.order() == 3);
  CHECK(k3.edge_count() == 3);
  CHECK(k3.adjacent(0, 1));
  CHECK(k3.adjacent(0, 2));
  CHECK(k3.adjacent(1, 2));

  Graph e2 = parse_graph6("A?");
  CHECK(e2.order() == 2);
  CHECK(e2.edge_count() == 0);

  Graph k1 = parse_graph6("@");
  CHECK(k1.order() == 1);
  CHECK(k1.edge_count() == 0);
}

TEST_CASE("graph6 encode anchors") {
  CHECK(encode_graph6(Graph(1, {})) == "@");
  CHECK(encode_graph6(Graph(3, {{0, 1}, {0, 2}, {1, 2}})) == "Bw");
  CHECK(encode_graph6(Graph(3, {{0, 1}, {1, 2}})) == "Bg");
}

TEST_CASE("graph6 malformed inputs") {
  CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph6("B"), std::invalid_argument);    // truncated body
  CHECK_THROWS_AS(parse_graph6("Bw!"), std::invalid_argument);  // bad length
  CHECK_THROWS_AS(parse_graph6("B\x07"), std::invalid_argument); // char out of range
  CHECK_THROWS_AS(parse_graph6("A?extra"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph6("~??"), std::invalid_argument);  // multi-byte header
  // trailing padding bits must be zero: K1,2 has 1 pair bit used of 6
  CHECK_THROWS_AS(parse_graph6("A~"), std::invalid_argument);
  Graph big(63, {});
  CHECK_THROWS_AS(encode_graph6(big), std::invalid_argument);
}

TEST_CASE("graph6 round-trips over the small corpus") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : enumerate_connected_graphs(n)) {
      Graph back = parse_graph6(encode_graph6(g));
      CHECK(back == g);
    }
  for (int n = 1; n <= 8; ++n)
    for (const Graph& t : enumerate_trees(n)) CHECK(parse_graph6(encode_graph6(t)) == t);
}

TEST_CASE("parse_graph6_lines") {
  auto gs = parse_graph6_lines("Bw\n@\r\n\nBg\n");
  REQUIRE(gs.size() == 3);
  CHECK(gs[0].edge_count() == 3);
  CHECK(gs[1].order() == 1);
  CHECK(gs[2].edge_count() == 2);
}

TEST_CASE("distances") {
  Graph p3 = generate(Family::path, {3});
  DistanceMatrix dm = all_pairs_distances(p3);
  CHECK(dm.at(0, 2) == 2);
  CHECK(dm.at(2, 0) == 2);

  DistanceMatrix one = all_pairs_distances(Graph(1, {}));
  CHECK(one.at(0, 0) == 0);

  Graph two_edges(4, {{0, 1}, {2, 3}});
  DistanceMatrix dm2 = all_pairs_distances(two_edges);
  CHECK(dm2.at(0, 2) == DistanceMatrix::kUnreachable);
  CHECK(dm2.at(0, 1) == 1);
}

TEST_CASE("distance matrix invariants on generated graphs") {
  std::vector<Graph> sample = {
      generate(Family::cycle, {6}),     generate(Family::star, {5}),
      generate(Family::hypercube, {3}), generate(Family::kneser, {2, 5}),
      generate(Family::complete_bipartite, {2, 3}),
  };
  for (const Graph& g : sample) {
    DistanceMatrix dm = all_pairs_distances(g);
    for (int u = 0; u < g.order(); ++u) {
      CHECK(dm.at(u, u) == 0);
      for (int v = 0; v < g.order(); ++v) {
        CHECK(dm.at(u, v) == dm.at(v, u));
        for (int w = 0; w < g.order(); ++w) {
          if (dm.reachable(u, w) && dm.reachable(w, v))
            CHECK(dm.at(u, v) <= dm.at(u, w) + dm.at(w, v));
        }
      }
    }
  }
}

TEST_CASE("generators") {
  Graph q3 = generate(Family::hypercube, {3});
  CHECK(q3.order() == 8);
  CHECK(q3.edge_count() == 12);
  for (int v = 0; v < 8; ++v) CHECK(q3.degree(v) == 3);

  Graph petersen = generate(Family::kneser, {2, 5});
  CHECK(petersen.order() == 10);
  for (int v = 0; v < 10; ++v) CHECK(petersen.degree(v) == 3);

  Graph star = generate(Family::star, {5});
  CHECK(star.order() == 6);
  CHECK(graph_stats(star).max_degree == 5);

  CHECK(generate(Family::complete, {4}).edge_count() == 6);
  CHECK(generate(Family::complete_bipartite, {2, 3}).edge_count() == 6);
  CHECK(generate(Family::cycle, {5}).edge_count() == 5);

  CHECK_THROWS_AS(generate(Family::cycle, {2}), std::invalid_argument);
  CHECK_THROWS_AS(generate(Family::kneser, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(generate(Family::hypercube, {7}), std::invalid_argument);
  CHECK_THROWS_AS(generate(Family::path, {1, 2}), std::invalid_argument);
}

TEST_CASE("kneser diameter is 2 from n = 3k on (k = 2)") {
  for (int n : {6, 7, 8}) {
    auto st = graph_stats(generate(Family::kneser, {2, n}));
    REQUIRE(st.diameter.has_value());
    CHECK(*st.diameter == 2);
  }
  // below the threshold the Petersen graph has diameter 2 as well, but
  // K(2,4) is a perfect matching
  auto st = graph_stats(generate(Family::kneser, {2, 4}));
  CHECK(st.component_count == 3);
}

TEST_CASE("graph stats") {
  auto c5 = graph_stats(generate(Family::cycle, {5}));
  CHECK(c5.max_degree == 2);
  CHECK(c5.girth == 5);
  CHECK_FALSE(c5.bipartite);

  auto star = graph_stats(generate(Family::star, {5}));
  CHECK(star.diameter == 2);
  CHECK_FALSE(star.girth.has_value());
  CHECK(star.bipartite);

  auto q3 = graph_stats(generate(Family::hypercube, {3}));
  CHECK(q3.girth == 4);
  CHECK(q3.diameter == 3);
  CHECK(q3.bipartite);

  auto two = graph_stats(Graph(4, {{0, 1}, {2, 3}}));
  CHECK(two.component_count == 2);
  CHECK_FALSE(two.diameter.has_value());
}

TEST_CASE("connected graph enumeration counts") {
  CHECK(enumerate_connected_graphs(2).size() == 1);
  CHECK(enumerate_connected_graphs(3).size() == 4);
  CHECK(enumerate_connected_graphs(4).size() == 38);
  for (int n = 1; n <= 5; ++n)
    CHECK(static_cast<long long>(enumerate_connected_graphs(n).size()) ==
          oracles::connected_graph_count(n));
  CHECK_THROWS_AS(enumerate_connected_graphs(7), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_connected_graphs(0), std::invalid_argument);
}

TEST_CASE("tree enumeration counts and distinctness") {
  CHECK(enumerate_trees(3).size() == 1);
  CHECK(enumerate_trees(4).size() == 2);
  CHECK(enumerate_trees(7).size() == 11);
  for (int n = 1; n <= 9; ++n)
    CHECK(static_cast<long long>(enumerate_trees(n).size()) == oracles::free_tree_count(n));
  CHECK_THROWS_AS(enumerate_trees(10), std::invalid_argument);

  std::set<std::string> forms;
  for (const Graph& t : enumerate_trees(8)) {
    CHECK(is_tree(t));
    CHECK(forms.insert(tree_canonical_form(t)).second);
  }
}

TEST_CASE("contains_subtree") {
  Graph p5 = generate(Family::path, {5});
  Graph p3 = generate(Family::path, {3});
  Graph p4 = generate(Family::path, {4});
  Graph claw = generate(Family::star, {3});
  CHECK(contains_subtree(p5, p3));
  CHECK_FALSE(contains_subtree(claw, p4));

  Graph spider(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  CHECK(contains_subtree(spider, claw));
  CHECK(contains_subtree(spider, p5));
  CHECK_FALSE(contains_subtree(p5, claw));

  CHECK_THROWS_AS(contains_subtree(generate(Family::cycle, {4}), p3), std::invalid_argument);
}

TEST_CASE("induced subgraph and components") {
  Graph g(5, {{0, 1}, {1, 2}, {3, 4}});
  auto comps = components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == VertexSet::of({0, 1, 2}));
  CHECK(comps[1] == VertexSet::of({3, 4}));

  std::vector<int> old_of;
  Graph sub = g.induced(comps[0], &old_of);
  CHECK(sub.order() == 3);
  CHECK(sub.edge_count() == 2);
  CHECK(old_of == std::vector<int>{0, 1, 2});
  CHECK(is_connected(sub));
}

TEST_CASE("random corpus is deterministic and connected") {
  auto a = random_connected_graphs(20, {6, 7}, 42);
  auto b = random_connected_graphs(20, {6, 7}, 42);
  REQUIRE(a.size() == 20);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i] == b[i]);
    CHECK(is_connected(a[i]));
    CHECK(a[i].order() == (i % 2 == 0 ? 6 : 7));
  }
  auto c = random_connected_graphs(20, {6, 7}, 43);
  bool any_diff = false;
  for (std::size_t i = 0; i < a.size(); ++i) any_diff |= !(a[i] == c[i]);
  CHECK(any_diff);
}
