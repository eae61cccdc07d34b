#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "locgame/designs.hpp"
#include "locgame/generators.hpp"
#include "locgame/reference.hpp"
#include "locgame/solver.hpp"

using namespace locgame;

TEST_CASE("clique base cases") {
  Graph k3 = generate(Family::complete, {3});
  auto v1 = cop_win(k3, 1);
  CHECK_FALSE(v1.cop_win);
  REQUIRE(v1.certificate.has_value());
  CHECK(verify_certificate(k3, 1, Variant::standard, *v1.certificate));
  // every safe state keeps at least two candidates, and V is safe
  for (VertexSet s : v1.certificate->safe_states) CHECK(s.size() >= 2);

  auto v2 = cop_win(k3, 2);
  CHECK(v2.cop_win);
  REQUIRE(v2.strategy.has_value());
  CHECK(verify_strategy(k3, 2, Variant::standard, *v2.strategy));
}

TEST_CASE("star is a one-cop graph") {
  Graph star = generate(Family::star, {5});
  auto v = cop_win(star, 1);
  CHECK(v.cop_win);
  REQUIRE(v.strategy.has_value());
  CHECK(v.strategy->depth() <= 5);
  CHECK(verify_strategy(star, 1, Variant::standard, *v.strategy));
}

TEST_CASE("localization numbers") {
  CHECK(*localization_number(generate(Family::star, {5})).zeta == 1);
  CHECK(*localization_number(generate(Family::complete, {3})).zeta == 2);
  CHECK(*localization_number(incidence_graph(projective_plane(2))).zeta == 3);
  // restricting the robber's backtracking can only help the cops
  CHECK(*localization_number(generate(Family::complete, {3}), Variant::no_backtrack).zeta == 1);
  CHECK(reference_cop_win(generate(Family::complete, {3}), 1, Variant::no_backtrack));
}

TEST_CASE("reference solver anchors") {
  CHECK(reference_cop_win(generate(Family::path, {4}), 1));
  // pinned oracle output: two probes never corner a robber on K4
  CHECK_FALSE(reference_cop_win(generate(Family::complete, {4}), 2));
}

TEST_CASE("engine agrees with the reference on every small instance") {
  for (int n = 1; n <= 4; ++n)
    for (const Graph& g : enumerate_connected_graphs(n))
      for (int k = 1; k <= 3; ++k) {
        SolveOptions fast;
        fast.with_evidence = false;
        CHECK(cop_win(g, k, Variant::standard, fast).cop_win == reference_cop_win(g, k));
        CHECK(cop_win(g, k, Variant::no_backtrack, fast).cop_win ==
              reference_cop_win(g, k, Variant::no_backtrack));
      }
}

TEST_CASE("zeta stays within the universal bounds") {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : enumerate_connected_graphs(n)) {
      auto z = localization_number(g);
      REQUIRE(z.zeta.has_value());
      CHECK(*z.zeta >= 1);
      CHECK(*z.zeta <= n - 1);
      auto znb = localization_number(g, Variant::no_backtrack);
      CHECK(*znb.zeta <= *z.zeta);
    }
}

TEST_CASE("strategy extraction depths") {
  CHECK(extract_strategy(generate(Family::complete, {2}), 1).depth() == 1);
  // probing one endpoint of a path resolves it outright
  CHECK(extract_strategy(generate(Family::path, {4}), 1).depth() == 1);
  CHECK(extract_strategy(generate(Family::star, {5}), 1).depth() == 4);
  CHECK_THROWS_AS(extract_strategy(generate(Family::complete, {3}), 1), std::logic_error);
}

TEST_CASE("tampered strategies are rejected") {
  Graph star = generate(Family::star, {5});
  StrategyTree good = extract_strategy(star, 1);
  REQUIRE(verify_strategy(star, 1, Variant::standard, good));

  StrategyTree bad = good;
  // find an edge leading to a child and relabel it captured
  bool mutated = false;
  for (auto& node : bad.nodes) {
    for (auto& e : node.edges)
      if (e.child != StrategyTree::kCaptured) {
        e.child = StrategyTree::kCaptured;
        mutated = true;
        break;
      }
    if (mutated) break;
  }
  REQUIRE(mutated);
  std::string why;
  CHECK_FALSE(verify_strategy(star, 1, Variant::standard, bad, &why));
  CHECK_FALSE(why.empty());

  StrategyTree wrong_probe = good;
  wrong_probe.nodes[0].probe = {0};  // center probe cannot match the stored edges
  CHECK_FALSE(verify_strategy(star, 1, Variant::standard, wrong_probe));

  StrategyTree wrong_root = good;
  wrong_root.nodes[0].territory.remove(wrong_root.nodes[0].territory.lowest());
  CHECK_FALSE(verify_strategy(star, 1, Variant::standard, wrong_root));
}

TEST_CASE("certificates and tampering") {
  Graph c5 = generate(Family::cycle, {5});
  SolveOptions fast;
  fast.with_evidence = false;
  bool win1 = cop_win(c5, 1, Variant::standard, fast).cop_win;
  CHECK(win1 == reference_cop_win(c5, 1));
  if (!win1) {
    RobberCertificate cert = extract_certificate(c5, 1);
    CHECK(verify_certificate(c5, 1, Variant::standard, cert));
  }

  Graph k3 = generate(Family::complete, {3});
  RobberCertificate cert = extract_certificate(k3, 1);
  REQUIRE(verify_certificate(k3, 1, Variant::standard, cert));

  RobberCertificate broken = cert;
  broken.safe_states.pop_back();
  std::string why;
  bool still_ok = verify_certificate(k3, 1, Variant::standard, broken, &why);
  if (broken.safe_states.empty()) {
    CHECK_FALSE(still_ok);
  } else {
    // dropping a state must break closure or remove V
    CHECK_FALSE(still_ok);
  }

  RobberCertificate empty;
  empty.n = 3;
  empty.cops = 1;
  CHECK_FALSE(verify_certificate(k3, 1, Variant::standard, empty));

  // certificate extraction refuses cop-win instances
  CHECK_THROWS_AS(extract_certificate(generate(Family::complete, {2}), 1), std::logic_error);
}

TEST_CASE("evidence JSON round-trips") {
  Graph star = generate(Family::star, {5});
  StrategyTree t = extract_strategy(star, 1);
  auto j = strategy_to_json(t);
  StrategyTree back = strategy_from_json(nlohmann::json::parse(j.dump()));
  CHECK(verify_strategy(star, 1, Variant::standard, back));
  CHECK(strategy_to_json(back).dump() == j.dump());

  Graph k3 = generate(Family::complete, {3});
  RobberCertificate c = extract_certificate(k3, 1);
  auto cj = certificate_to_json(c);
  RobberCertificate cback = certificate_from_json(nlohmann::json::parse(cj.dump()));
  CHECK(verify_certificate(k3, 1, Variant::standard, cback));
  CHECK(certificate_to_json(cback).dump() == cj.dump());

  CHECK_FALSE(strategy_to_dot(t, star).empty());
  CHECK_FALSE(certificate_to_dot(c, k3).empty());
}

TEST_CASE("disconnected graphs take the maximum over components") {
  Graph two_edges(4, {{0, 1}, {2, 3}});
  CHECK(*localization_number(two_edges).zeta == 1);
  Graph mixed(5, {{0, 1}, {2, 3}, {3, 4}, {2, 4}});  // K2 + K3
  CHECK(*localization_number(mixed).zeta == 2);
  CHECK_THROWS_AS(cop_win(two_edges, 1), std::invalid_argument);
}

TEST_CASE("solver input validation and budgets") {
  Graph k3 = generate(Family::complete, {3});
  CHECK_THROWS_AS(cop_win(k3, 0), std::invalid_argument);

  SolveOptions tiny;
  tiny.budget_secs = 1e-9;
  CHECK_FALSE(try_cop_win(incidence_graph(projective_plane(2)), 3, Variant::standard, tiny)
                  .has_value());

  auto bounded = localization_number(generate(Family::complete, {4}), Variant::standard, 2);
  CHECK_FALSE(bounded.zeta.has_value());
  CHECK_FALSE(bounded.budget_hit);
  CHECK(bounded.k_searched == 2);
}

TEST_CASE("verdicts and evidence are identical across thread counts") {
  Graph fano = incidence_graph(projective_plane(2));
  auto run = [&fano](int threads) {
#ifdef _OPENMP
    omp_set_num_threads(threads);
#else
    (void)threads;
#endif
    auto v2 = cop_win(fano, 2);
    auto v3 = cop_win(fano, 3);
    std::string blob = certificate_to_json(*v2.certificate).dump() + "|" +
                       strategy_to_json(*v3.strategy).dump();
    return std::tuple(v2.cop_win, v3.cop_win, v2.stats.visited_states,
                      v3.stats.visited_states, blob);
  };
  auto a = run(1);
  auto b = run(8);
#ifdef _OPENMP
  omp_set_num_threads(omp_get_num_procs());
#endif
  CHECK(a == b);
}

TEST_CASE("single vertex and k >= n edge cases") {
  Graph k1(1, {});
  auto v = cop_win(k1, 1);
  CHECK(v.cop_win);
  CHECK(*localization_number(k1).zeta == 1);
  Graph k2 = generate(Family::complete, {2});
  CHECK(cop_win(k2, 5).cop_win);  // more cops than vertices still fine
}
