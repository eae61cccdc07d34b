#pragma once

#include <cstdint>
#include <string>

#include "locgame/bounds.hpp"

namespace locgame {

struct SuiteOptions {
  int max_n = 5;        // corpus graph order / tree order cap (trees: 8)
  int max_q = 3;        // largest plane order attempted
  int random_count = 200;
  std::uint64_t seed = 0x5eed0C9Aull;
  double budget_secs = 0;  // per stretch instance; 0 = no budget
};

struct SuiteResult {
  BoundReport report;
  bool budget_skipped = false;  // a stretch instance ran out of budget
};

// Exhaustive small-graph properties: zeta vs beta, chi, pw, degree bounds,
// the no-backtrack ordering, and agreement with the reference solver.
SuiteResult run_corpus_suite(const SuiteOptions& opts);

// Trees up to max_n: two cops always suffice; derives the minimal two-cop
// tree and checks the containment characterization.
SuiteResult run_trees_suite(const SuiteOptions& opts);

// Design validation plus the exact localization values of plane incidence
// graphs at solvable orders.
SuiteResult run_designs_suite(const SuiteOptions& opts);

// Polarity graph structure (order, degree spectrum, C4-freeness, diameter)
// and localization bounds for q in {2..max_q}.
SuiteResult run_polarity_suite(const SuiteOptions& opts);

// Hypercube localization range for Q3 (and Q4 as a budgeted stretch).
SuiteResult run_hypercube_suite(const SuiteOptions& opts);

// Kneser graphs K(2,n): diameter-2 structure, solved values for the small
// instances, and the asymptotic rows reported without assertion.
SuiteResult run_kneser_suite(const SuiteOptions& opts);

// Dispatch by name: corpus, trees, designs, polarity, hypercube, kneser.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace locgame
