#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "locgame/bounds.hpp"
#include "locgame/designs.hpp"
#include "locgame/generators.hpp"
#include "locgame/invariants.hpp"
#include "oracles.hpp"

using namespace locgame;

TEST_CASE("metric dimension anchors") {
  CHECK(metric_dimension(generate(Family::star, {5})) == 4);
  CHECK(metric_dimension(generate(Family::path, {5})) == 1);
  CHECK(metric_dimension(generate(Family::complete, {4})) == 3);
  CHECK(metric_dimension(Graph(1, {})) == 1);
  CHECK_THROWS_AS(metric_dimension(generate(Family::complete, {21})), SizeLimitError);
}

TEST_CASE("metric dimension equals the brute-force definition on the corpus") {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : enumerate_connected_graphs(n))
      CHECK(metric_dimension(g) == oracles::brute_metric_dimension(g));
}

TEST_CASE("chromatic number") {
  CHECK(chromatic_number(incidence_graph(projective_plane(2))) == 2);  // bipartite
  CHECK(chromatic_number(generate(Family::cycle, {5})) == 3);
  CHECK(chromatic_number(generate(Family::complete, {4})) == 4);
  CHECK(chromatic_number(generate(Family::path, {6})) == 2);
  CHECK(chromatic_number(Graph(3, {})) == 1);

  // Petersen graph: not bipartite forces chi >= 3, and the solver's witness
  // 3-coloring is proper
  Graph petersen = generate(Family::kneser, {2, 5});
  CHECK_FALSE(graph_stats(petersen).bipartite);
  CHECK(chromatic_number(petersen) == 3);
  auto coloring = find_coloring(petersen, 3);
  REQUIRE_FALSE(coloring.empty());
  for (auto [u, v] : petersen.edges()) CHECK(coloring[static_cast<std::size_t>(u)] != coloring[static_cast<std::size_t>(v)]);
  CHECK(find_coloring(petersen, 2).empty());

  CHECK_THROWS_AS(chromatic_number(generate(Family::complete, {19})), SizeLimitError);
  // large bipartite graphs bypass the size limit
  CHECK(chromatic_number(incidence_graph(affine_plane(3))) == 2);
}

TEST_CASE("pathwidth") {
  CHECK(pathwidth(generate(Family::path, {6})) == 1);
  CHECK(pathwidth(generate(Family::complete, {5})) == 4);
  CHECK(pathwidth(generate(Family::cycle, {4})) == 2);
  CHECK(pathwidth(generate(Family::star, {5})) == 1);
  CHECK(pathwidth(Graph(1, {})) == 0);
  CHECK_THROWS_AS(pathwidth(generate(Family::complete, {19})), SizeLimitError);
}

TEST_CASE("check_bounds rows") {
  // projective plane context with the solved value
  {
    BoundInputs in;
    in.n = 14;
    in.zeta = 3;
    in.family.kind = FamilyContext::Kind::projective_plane_incidence;
    in.family.q = 2;
    in.family.r = in.family.k = 3;
    in.family.lambda = 1;
    auto rep = check_bounds(in);
    bool saw_exact = false, saw_bibd = false;
    for (const auto& e : rep.entries) {
      if (e.id == "projective-exact") {
        saw_exact = true;
        CHECK(e.applicable);
        CHECK(e.pass);
      }
      if (e.id == "bibd-upper") {
        saw_bibd = true;
        CHECK(e.pass);  // 3 <= 2*3+3-3 = 6
      }
    }
    CHECK(saw_exact);
    CHECK(saw_bibd);
    CHECK(rep.all_pass());
  }
  // tree bound
  {
    BoundInputs in;
    in.n = 10;
    in.zeta = 2;
    in.family.kind = FamilyContext::Kind::tree;
    auto rep = check_bounds(in);
    bool found = false;
    for (const auto& e : rep.entries)
      if (e.id == "tree-upper") {
        found = true;
        CHECK(e.pass);
      }
    CHECK(found);
  }
  // cubic bound
  {
    BoundInputs in;
    in.n = 10;
    in.zeta = 3;
    GraphStats st;
    st.max_degree = 3;
    in.stats = st;
    auto rep = check_bounds(in);
    bool found = false;
    for (const auto& e : rep.entries)
      if (e.id == "max-degree-cubic") {
        found = true;
        CHECK(e.pass);
      }
    CHECK(found);
  }
  // single-vertex graph: the vacuous rows must not appear
  {
    BoundInputs in;
    in.n = 1;
    in.zeta = 1;
    in.pw = 0;
    auto rep = check_bounds(in);
    for (const auto& e : rep.entries) {
      CHECK(e.id != "trivial-upper");
      CHECK(e.id != "pathwidth");
    }
  }
  // asymptotic rows are informational
  {
    BoundInputs in;
    in.n = 10;
    in.zeta = 3;
    in.family.kind = FamilyContext::Kind::kneser;
    in.family.k_subset = 2;
    in.family.ground = 5;
    auto rep = check_bounds(in);
    bool found = false;
    for (const auto& e : rep.entries)
      if (e.id == "kneser-asymptotic") {
        found = true;
        CHECK_FALSE(e.applicable);
      }
    CHECK(found);
  }
  // a failing row is reported as such
  {
    BoundInputs in;
    in.n = 5;
    in.zeta = 4;
    in.beta = 2;
    auto rep = check_bounds(in);
    CHECK_FALSE(rep.all_pass());
  }
}

TEST_CASE("report rendering") {
  BoundInputs in;
  in.n = 6;
  in.zeta = 1;
  in.beta = 4;
  in.family.kind = FamilyContext::Kind::star;
  in.family.leaves = 5;
  auto rep = check_bounds(in);
  rep.context = "star test";
  std::string table = report_table(rep);
  CHECK(table.find("star-zeta") != std::string::npos);
  CHECK(table.find("PASS") != std::string::npos);
  auto j = report_to_json(rep);
  CHECK(j["entries"].size() == rep.entries.size());
  CHECK(j["summary"]["failures"] == 0);
}

TEST_CASE("derive_T3 reports an empty derivation below 10 vertices") {
  auto rep = derive_T3(8);
  CHECK(rep.all_zeta_in_12);
  CHECK(rep.corpus_size == 48);
  CHECK(rep.minimal.empty());
  CHECK_FALSE(rep.biconditional);
  CHECK(rep.detail.find("no two-cop tree") != std::string::npos);
  CHECK_THROWS_AS(derive_T3(6), std::invalid_argument);
  CHECK_THROWS_AS(derive_T3(14), std::invalid_argument);
}

TEST_CASE("derive_T3 finds the unique minimal two-cop tree at n = 13") {
  auto rep = derive_T3(13);
  CHECK(rep.corpus_size == 2288);
  CHECK(rep.all_zeta_in_12);
  REQUIRE(rep.minimal.size() == 1);
  CHECK(rep.biconditional);
  const Graph& t3 = rep.minimal.front();
  CHECK(t3.order() == 10);
  // a center of degree three whose neighbors each carry two leaves
  CHECK(tree_canonical_form(t3) == "((()())(()())(()()))");
}
