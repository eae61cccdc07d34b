#pragma once

#include <cstdint>
#include <optional>

#include "locgame/evidence.hpp"
#include "locgame/game.hpp"
#include "locgame/graph.hpp"

namespace locgame {

struct SolverStats {
  std::uint64_t visited_states = 0;
  int rounds = 0;
  double wall_ms = 0;
};

struct GameVerdict {
  bool cop_win = false;
  int cops = 0;
  Variant variant = Variant::standard;
  SolverStats stats;
  std::optional<StrategyTree> strategy;        // present iff cop_win
  std::optional<RobberCertificate> certificate;  // present iff !cop_win
};

struct SolveOptions {
  bool with_evidence = true;
  double budget_secs = 0;                  // 0 = unlimited
  std::uint64_t max_states = 20'000'000;   // state-table cap, soft budget
};

// Decides whether k cops capture the robber on a connected graph: V(G) lies
// in the least fixpoint of "some probe sends every non-singleton class back
// into the set". Infinite play is a robber win. Deterministic for every
// thread count. Throws std::invalid_argument for k < 1 or disconnected input.
GameVerdict cop_win(const Graph& g, int k, Variant variant = Variant::standard,
                    const SolveOptions& opts = SolveOptions{});

// Budget-aware variant: nullopt when the time or state budget ran out.
std::optional<GameVerdict> try_cop_win(const Graph& g, int k,
                                       Variant variant = Variant::standard,
                                       const SolveOptions& opts = SolveOptions{});

struct LocalizationResult {
  std::optional<int> zeta;  // empty when no k <= k_max wins or budget ran out
  bool budget_hit = false;
  int k_searched = 0;  // largest cop count attempted
  SolverStats stats;   // aggregated over all attempts
};

// Least k <= k_max with a cop win, searching k = 1, 2, ...; disconnected
// graphs take the maximum over components. k_max = 0 selects the default
// max(1, n-1); the single-vertex graph needs one probe, so the n-1 default
// is raised to 1 there.
LocalizationResult localization_number(const Graph& g, Variant variant = Variant::standard,
                                       int k_max = 0, const SolveOptions& opts = SolveOptions{});

// Evidence extraction; each requires the corresponding winner and throws
// std::logic_error otherwise. The probe at every node is the
// lexicographically smallest one that keeps all children winning and
// minimizes the worst-case remaining depth.
StrategyTree extract_strategy(const Graph& g, int k, Variant variant = Variant::standard);
RobberCertificate extract_certificate(const Graph& g, int k, Variant variant = Variant::standard);

}  // namespace locgame
