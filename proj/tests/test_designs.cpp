#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "locgame/designs.hpp"
#include "locgame/graph.hpp"

using namespace locgame;

TEST_CASE("field axioms hold exhaustively for every supported order") {
  for (int q : FiniteField::supported_orders()) {
    CAPTURE(q);
    FiniteField f(q);
    CHECK(f.order() == q);
    for (int a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.mul(a, 0) == 0);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      for (int b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (int c = 0; c < q; ++c) {
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
    // nonzero elements form a cyclic group: some generator has order q-1
    bool cyclic = false;
    for (int g = 1; g < q && !cyclic; ++g) {
      int x = g, ord = 1;
      while (x != 1) {
        x = f.mul(x, g);
        ++ord;
      }
      cyclic = ord == q - 1;
    }
    CHECK(cyclic);
  }
  CHECK_THROWS_AS(make_field(6), std::invalid_argument);
  CHECK_THROWS_AS(make_field(12), std::invalid_argument);
}

TEST_CASE("field arithmetic anchors") {
  CHECK(make_field(2).add(1, 1) == 0);
  CHECK(make_field(3).mul(2, 2) == 1);
  // GF(4) with x^2+x+1: element 2 is x, 3 is x+1, and x*x = x+1
  CHECK(make_field(4).mul(2, 2) == 3);
}

TEST_CASE("projective planes") {
  for (int q : {2, 3, 4}) {
    CAPTURE(q);
    Design d = projective_plane(q);
    CHECK(d.v == q * q + q + 1);
    CHECK(d.b == d.v);
    CHECK(d.r == q + 1);
    CHECK(d.k == q + 1);
    CHECK(d.lambda == 1);
    CHECK(validate_design(d).all_pass());
  }
  Design fano = projective_plane(2);
  CHECK(fano.points.size() == 7);
  CHECK(fano.blocks.size() == 7);
  for (const auto& blk : fano.blocks) CHECK(blk.size() == 3);

  // any two lines of a projective plane meet in exactly one point
  Design d3 = projective_plane(3);
  for (std::size_t i = 0; i < d3.blocks.size(); ++i)
    for (std::size_t j = i + 1; j < d3.blocks.size(); ++j) {
      std::set<int> a(d3.blocks[i].begin(), d3.blocks[i].end());
      int common = 0;
      for (int p : d3.blocks[j]) common += a.count(p);
      CHECK(common == 1);
    }
}

TEST_CASE("affine planes") {
  Design a2 = affine_plane(2);
  CHECK(a2.v == 4);
  CHECK(a2.b == 6);
  CHECK(validate_design(a2).all_pass());
  // the six lines are exactly the six 2-subsets of the four points
  std::set<std::set<int>> blocks;
  for (const auto& blk : a2.blocks) blocks.insert({blk.begin(), blk.end()});
  CHECK(blocks.size() == 6);

  Design a3 = affine_plane(3);
  CHECK(a3.v == 9);
  CHECK(a3.b == 12);
  CHECK(a3.k == 3);
  CHECK(a3.r == 4);
  CHECK(validate_design(a3).all_pass());
  // k=3 and lambda=1 on 9 points: the blocks form a Steiner triple system
  Design sts9;
  sts9.v = 9;
  sts9.b = 12;
  sts9.r = 4;
  sts9.k = 3;
  sts9.lambda = 1;
  sts9.points = a3.points;
  sts9.blocks = a3.blocks;
  CHECK(validate_design(sts9).all_pass());
}

TEST_CASE("steiner triple systems") {
  CHECK(steiner_triple_system(7).blocks.size() == 7);
  CHECK(steiner_triple_system(9).blocks.size() == 12);
  CHECK(steiner_triple_system(13).blocks.size() == 26);
  for (int v : {7, 9, 13, 15, 19, 21, 25}) {
    CAPTURE(v);
    Design d = steiner_triple_system(v);
    CHECK(d.k == 3);
    CHECK(d.lambda == 1);
    CHECK(d.r == (v - 1) / 2);
    CHECK(validate_design(d).all_pass());
  }
  CHECK_THROWS_AS(steiner_triple_system(8), std::invalid_argument);
  CHECK_THROWS_AS(steiner_triple_system(5), std::invalid_argument);
  CHECK_THROWS_AS(steiner_triple_system(11), std::invalid_argument);
}

TEST_CASE("validate_design flags broken designs") {
  Design fano = projective_plane(2);
  fano.blocks.pop_back();
  auto rep = validate_design(fano);
  CHECK_FALSE(rep.all_pass());
  bool pair_fail = false, count_fail = false;
  for (const auto& e : rep.entries) {
    if (e.axiom == "pair coverage lambda" && !e.pass) pair_fail = true;
    if (e.axiom == "block count b" && !e.pass) count_fail = true;
  }
  CHECK(pair_fail);
  CHECK(count_fail);
}

TEST_CASE("incidence graphs") {
  Graph fano = incidence_graph(projective_plane(2));
  CHECK(fano.order() == 14);
  CHECK(fano.edge_count() == 21);
  auto st = graph_stats(fano);
  CHECK(st.bipartite);
  CHECK(st.girth == 6);
  CHECK(st.max_degree == 3);
  for (int v = 0; v < 14; ++v) CHECK(fano.degree(v) == 3);
  CHECK(fano.label(0) == "(1:0:0)");
  CHECK(fano.label(7) == "B0");

  CHECK(incidence_graph(affine_plane(2)).order() == 10);
  CHECK(incidence_graph(affine_plane(2)).edge_count() == 12);

  Graph sts9 = incidence_graph(steiner_triple_system(9));
  CHECK(sts9.order() == 21);
  CHECK(sts9.edge_count() == 36);

  CHECK_THROWS_AS(incidence_graph(steiner_triple_system(19)), SizeLimitError);

  // incidence graphs of projective planes are (q+1)-regular with girth 6
  for (int q : {2, 3}) {
    Graph g = incidence_graph(projective_plane(q));
    auto s = graph_stats(g);
    CHECK(s.girth == 6);
    CHECK(s.bipartite);
    for (int v = 0; v < g.order(); ++v) CHECK(g.degree(v) == q + 1);
  }
}

TEST_CASE("polarity map symmetry") {
  for (int q : {2, 3, 4}) {
    CAPTURE(q);
    Design d = projective_plane(q);
    PolarityMap pm = orthogonal_polarity(q);
    REQUIRE(pm.point_to_line.size() == d.points.size());
    // u on the polar of v iff v on the polar of u, over all pairs
    auto on_polar = [&](int u, int v) {
      const auto& blk = d.blocks[static_cast<std::size_t>(pm.point_to_line[static_cast<std::size_t>(v)])];
      return std::find(blk.begin(), blk.end(), u) != blk.end();
    };
    for (int u = 0; u < d.v; ++u)
      for (int v = 0; v < d.v; ++v) CHECK(on_polar(u, v) == on_polar(v, u));
  }
}

TEST_CASE("polarity graphs") {
  Graph p2 = polarity_graph(2);
  CHECK(p2.order() == 7);
  CHECK(p2.edge_count() == 9);

  for (int q : {2, 3, 4, 5}) {
    CAPTURE(q);
    Graph g = polarity_graph(q);
    CHECK(g.order() == q * q + q + 1);
    int deg_q = 0;
    for (int v = 0; v < g.order(); ++v) {
      int dgr = g.degree(v);
      CHECK((dgr == q || dgr == q + 1));
      if (dgr == q) ++deg_q;
    }
    CHECK(deg_q == q + 1);
    // C4-free: no two vertices share two common neighbors
    for (int u = 0; u < g.order(); ++u)
      for (int v = u + 1; v < g.order(); ++v)
        CHECK((g.neighbors(u) & g.neighbors(v)).size() <= 1);
    auto st = graph_stats(g);
    CHECK(st.diameter == 2);
  }
}

TEST_CASE("symmetric BIBD families") {
  auto fams = symmetric_bibd_families();
  REQUIRE(fams.size() >= 2);
  CHECK(fams[0].expected_zeta == 3);
  CHECK(fams[1].expected_zeta == 4);
  for (const auto& f : fams) {
    CHECK(f.design.v == f.design.b);
    CHECK(f.design.lambda == 1);
    CHECK(f.expected_zeta == f.design.k);
    CHECK(validate_design(f.design).all_pass());
  }
}

TEST_CASE("design text round-trip") {
  Design d = steiner_triple_system(9);
  std::string text = write_design_text(d);
  Design back = read_design_text(text);
  CHECK(back.v == d.v);
  CHECK(back.b == d.b);
  CHECK(back.r == d.r);
  CHECK(back.k == d.k);
  CHECK(back.lambda == d.lambda);
  CHECK(back.blocks == d.blocks);
  CHECK(validate_design(back).all_pass());

  CHECK_THROWS_AS(read_design_text(""), std::invalid_argument);
  CHECK_THROWS_AS(read_design_text("1 2 three"), std::invalid_argument);
}
