#include "locgame/solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cassert>
#include <chrono>
#include <unordered_map>

namespace locgame {

namespace {

using Clock = std::chrono::steady_clock;

// Precomputed per-instance data for the territory dynamics.
struct GameTables {
  int n = 0;
  Variant variant = Variant::standard;
  std::vector<VertexSet> closed;               // closed neighborhood per vertex
  std::vector<std::vector<VertexSet>> layers;  // per vertex: distance-layer masks,
                                               // unreachable first, then d = 0, 1, ..
  std::vector<ProbeSet> probes;
  std::vector<VertexSet> probe_masks;
};

GameTables build_tables(const Graph& g, int k, Variant variant) {
  GameTables t;
  t.n = g.order();
  t.variant = variant;
  t.closed.resize(static_cast<std::size_t>(t.n));
  for (int v = 0; v < t.n; ++v) t.closed[static_cast<std::size_t>(v)] = g.closed_neighbors(v);

  DistanceMatrix dm = all_pairs_distances(g);
  t.layers.resize(static_cast<std::size_t>(t.n));
  for (int u = 0; u < t.n; ++u) {
    VertexSet unreach;
    std::array<VertexSet, VertexSet::kMaxVertices> byd{};
    for (int v = 0; v < t.n; ++v) {
      int d = dm.at(u, v);
      if (d == DistanceMatrix::kUnreachable)
        unreach.add(v);
      else
        byd[static_cast<std::size_t>(d)].add(v);
    }
    auto& lay = t.layers[static_cast<std::size_t>(u)];
    if (!unreach.empty()) lay.push_back(unreach);
    for (int d = 0; d < t.n; ++d)
      if (!byd[static_cast<std::size_t>(d)].empty()) lay.push_back(byd[static_cast<std::size_t>(d)]);
  }

  t.probes = all_probe_sets(t.n, k);
  t.probe_masks.reserve(t.probes.size());
  for (const auto& p : t.probes) {
    VertexSet m;
    for (int v : p) m.add(v);
    t.probe_masks.push_back(m);
  }
  return t;
}

// Splits t into equal-distance-vector classes for probe pi. Successive
// refinement by each probe vertex's distance layers yields the classes in
// lexicographic vector order. Returns the class count; classes land in cls.
inline int refine(const GameTables& T, VertexSet t, std::size_t pi, VertexSet* cls) {
  int nc = 1;
  cls[0] = t;
  VertexSet tmp[VertexSet::kMaxVertices];
  for (int p : T.probes[pi]) {
    const auto& lay = T.layers[static_cast<std::size_t>(p)];
    int out = 0;
    for (int i = 0; i < nc; ++i) {
      VertexSet rest = cls[i];
      for (const VertexSet& mask : lay) {
        VertexSet part = rest & mask;
        if (!part.empty()) {
          tmp[out++] = part;
          rest -= part;
          if (rest.empty()) break;
        }
      }
    }
    for (int i = 0; i < out; ++i) cls[i] = tmp[i];
    nc = out;
  }
  return nc;
}

inline VertexSet expand_class(const GameTables& T, VertexSet c, std::size_t pi) {
  VertexSet out = c;
  for (int v : c) out |= T.closed[static_cast<std::size_t>(v)];
  if (T.variant == Variant::no_backtrack) out -= T.probe_masks[pi];
  return out;
}

enum class EngineStatus { cop_win, robber_win, budget };

struct EngineConfig {
  bool prune = true;         // dominance pruning + early exit on the root verdict
  bool exact_levels = false; // full exploration; level[] = exact min-max capture depth
  double budget_secs = 0;
  std::uint64_t max_states = 20'000'000;
};

struct EngineResult {
  EngineStatus status = EngineStatus::budget;
  std::vector<std::uint64_t> terr;   // id -> territory bits
  std::vector<std::uint8_t> copwin;  // id -> decided cop-win
  std::vector<std::uint8_t> scanned; // id -> successors were explored
  std::vector<std::int32_t> level;   // id -> decision round (exact mode: capture depth)
  int rounds = 0;
};

// Least-fixpoint engine. States are territories at the cop turn, already
// expanded; the root is V since N[V] = V. Discovery proceeds in BFS layers;
// decisions propagate in synchronous (Jacobi) sweeps that read the previous
// sweep's statuses, so verdict, state table and levels are identical for
// every thread count.
class Engine {
 public:
  Engine(const GameTables& T, const EngineConfig& cfg) : T_(T), cfg_(cfg) {
    if (cfg.budget_secs > 0)
      deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(cfg.budget_secs));
  }

  EngineResult run() {
    const std::uint32_t root = intern(VertexSet::full(T_.n).bits());
    std::vector<std::uint32_t> frontier{root};
    while (!frontier.empty()) {
      if (out_of_budget()) return take(EngineStatus::budget);

      std::vector<ScanOut> outs(frontier.size());
      std::atomic<bool> abort{false};
#pragma omp parallel for schedule(dynamic, 8)
      for (std::size_t i = 0; i < frontier.size(); ++i) {
        if (abort.load(std::memory_order_relaxed)) continue;
        outs[i] = scan(frontier[i]);
        if (deadline_ && Clock::now() > *deadline_) abort.store(true, std::memory_order_relaxed);
      }
      if (abort.load()) return take(EngineStatus::budget);

      std::vector<std::uint32_t> next;
      for (std::size_t i = 0; i < frontier.size(); ++i) {
        std::uint32_t s = frontier[i];
        scanned_[s] = outs[i].decided ? 0 : 1;
        if (outs[i].decided) {
          decide(s, 1);
          continue;
        }
        for (std::uint64_t bits : outs[i].succs) {
          auto it = index_.find(bits);
          if (it != index_.end()) continue;
          std::uint32_t id = intern(bits);
          if (cfg_.prune && dominated(bits))
            copwin_[id] = 1;  // born cop-win, never expanded
          else
            next.push_back(id);
        }
      }
      if (terr_.size() > cfg_.max_states) return take(EngineStatus::budget);

      if (cfg_.prune) {
        if (!sweep_to_quiescence()) return take(EngineStatus::budget);
        if (copwin_[root]) return take(EngineStatus::cop_win);
      }
      frontier = std::move(next);
    }
    if (!sweep_to_quiescence()) return take(EngineStatus::budget);
    return take(copwin_[root] ? EngineStatus::cop_win : EngineStatus::robber_win);
  }

 private:
  struct ScanOut {
    std::uint8_t decided = 0;
    std::vector<std::uint64_t> succs;
  };

  std::uint32_t intern(std::uint64_t bits) {
    auto [it, fresh] = index_.try_emplace(bits, static_cast<std::uint32_t>(terr_.size()));
    if (fresh) {
      terr_.push_back(bits);
      copwin_.push_back(0);
      scanned_.push_back(0);
      level_.push_back(0);
    }
    return it->second;
  }

  bool dominated(std::uint64_t bits) const {
    for (std::uint64_t a : antichain_)
      if ((bits & ~a) == 0) return true;
    return false;
  }

  void antichain_insert(std::uint64_t bits) {
    for (std::uint64_t a : antichain_)
      if ((bits & ~a) == 0) return;
    std::erase_if(antichain_, [bits](std::uint64_t a) { return (a & ~bits) == 0; });
    antichain_.push_back(bits);
  }

  void decide(std::uint32_t id, int lvl) {
    copwin_[id] = 1;
    level_[id] = lvl;
    if (cfg_.prune) antichain_insert(terr_[id]);
  }

  // Explores one state: collects the distinct expanded successors of its
  // non-singleton classes over all probes. Stops early when a probe decides
  // the state: every class singleton, or (pruned mode) every non-singleton
  // class already expands into a known cop-win state.
  ScanOut scan(std::uint32_t s) const {
    ScanOut o;
    const VertexSet t(terr_[s]);
    VertexSet cls[VertexSet::kMaxVertices];
    for (std::size_t pi = 0; pi < T_.probes.size(); ++pi) {
      int nc = refine(T_, t, pi, cls);
      bool all_single = true;
      bool all_known = cfg_.prune;
      std::size_t first = o.succs.size();
      for (int i = 0; i < nc; ++i) {
        if (cls[i].size() == 1) continue;
        all_single = false;
        std::uint64_t succ = expand_class(T_, cls[i], pi).bits();
        o.succs.push_back(succ);
        if (all_known) {
          auto it = index_.find(succ);
          if (it == index_.end() || !copwin_[it->second]) all_known = false;
        }
      }
      if (all_single || (cfg_.prune && all_known)) {
        o.decided = 1;
        o.succs.clear();
        return o;
      }
      (void)first;
    }
    std::sort(o.succs.begin(), o.succs.end());
    o.succs.erase(std::unique(o.succs.begin(), o.succs.end()), o.succs.end());
    return o;
  }

  // True iff some probe sends every non-singleton class into the current
  // cop-win set. Only called on scanned states, whose successors are all
  // interned.
  bool eval(std::uint32_t s) const {
    const VertexSet t(terr_[s]);
    VertexSet cls[VertexSet::kMaxVertices];
    for (std::size_t pi = 0; pi < T_.probes.size(); ++pi) {
      int nc = refine(T_, t, pi, cls);
      bool ok = true;
      for (int i = 0; i < nc; ++i) {
        if (cls[i].size() == 1) continue;
        auto it = index_.find(expand_class(T_, cls[i], pi).bits());
        assert(it != index_.end());
        if (!copwin_[it->second]) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
    return false;
  }

  // Jacobi sweeps until a sweep decides nothing. Returns false on budget.
  bool sweep_to_quiescence() {
    for (;;) {
      if (out_of_budget()) return false;
      std::vector<std::uint32_t> cand;
      for (std::uint32_t id = 0; id < terr_.size(); ++id)
        if (scanned_[id] && !copwin_[id]) cand.push_back(id);
      if (cand.empty()) return true;

      std::vector<std::uint8_t> newly(cand.size(), 0);
      std::atomic<bool> abort{false};
#pragma omp parallel for schedule(dynamic, 16)
      for (std::size_t i = 0; i < cand.size(); ++i) {
        if (abort.load(std::memory_order_relaxed)) continue;
        newly[i] = eval(cand[i]) ? 1 : 0;
        if (deadline_ && Clock::now() > *deadline_) abort.store(true, std::memory_order_relaxed);
      }
      if (abort.load()) return false;

      ++rounds_;
      bool any = false;
      for (std::size_t i = 0; i < cand.size(); ++i)
        if (newly[i]) {
          decide(cand[i], rounds_);
          any = true;
        }
      if (!any) return true;
    }
  }

  bool out_of_budget() const { return deadline_ && Clock::now() > *deadline_; }

  EngineResult take(EngineStatus st) {
    EngineResult r;
    r.status = st;
    r.terr = std::move(terr_);
    r.copwin = std::move(copwin_);
    r.scanned = std::move(scanned_);
    r.level = std::move(level_);
    r.rounds = rounds_;
    return r;
  }

  const GameTables& T_;
  EngineConfig cfg_;
  std::optional<Clock::time_point> deadline_;
  std::vector<std::uint64_t> terr_;
  std::vector<std::uint8_t> copwin_;
  std::vector<std::uint8_t> scanned_;
  std::vector<std::int32_t> level_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::vector<std::uint64_t> antichain_;
  int rounds_ = 1;  // round 1 = states resolved by a single probe
};

void check_solvable_input(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("cop_win: need k >= 1");
  if (g.order() < 1) throw std::invalid_argument("cop_win: empty graph");
  if (!is_connected(g))
    throw std::invalid_argument("cop_win: disconnected input; use localization_number");
}

StrategyTree build_strategy(const Graph& g, int k, Variant variant, const GameTables& T,
                            const EngineResult& R) {
  DistanceMatrix dm = all_pairs_distances(g);
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  for (std::uint32_t id = 0; id < R.terr.size(); ++id) index.emplace(R.terr[id], id);

  StrategyTree tree;
  tree.n = g.order();
  tree.cops = k;
  tree.variant = variant;

  std::unordered_map<std::uint64_t, int> node_of;

  auto pick_probe = [&](std::uint32_t id) -> std::size_t {
    const VertexSet t(R.terr[id]);
    const int target = R.level[id];
    VertexSet cls[VertexSet::kMaxVertices];
    for (std::size_t pi = 0; pi < T.probes.size(); ++pi) {
      int nc = refine(T, t, pi, cls);
      bool all_single = true;
      bool valid = true;
      int worst = 0;
      for (int i = 0; i < nc && valid; ++i) {
        if (cls[i].size() == 1) continue;
        all_single = false;
        if (target == 1) {
          valid = false;
          break;
        }
        auto it = index.find(expand_class(T, cls[i], pi).bits());
        if (it == index.end() || !R.copwin[it->second]) {
          valid = false;
          break;
        }
        worst = std::max(worst, R.level[it->second]);
      }
      if (!valid) continue;
      if (all_single ? target == 1 : 1 + worst == target) return pi;
    }
    throw std::logic_error("extract_strategy: no probe matches the computed depth");
  };

  auto build = [&](auto&& self, std::uint32_t id) -> int {
    auto hit = node_of.find(R.terr[id]);
    if (hit != node_of.end()) return hit->second;
    int ni = static_cast<int>(tree.nodes.size());
    node_of.emplace(R.terr[id], ni);
    tree.nodes.emplace_back();

    std::size_t pi = pick_probe(id);
    auto classes = partition_by_probe(g, dm, VertexSet(R.terr[id]), T.probes[pi]);
    StrategyTree::Node node;
    node.territory = VertexSet(R.terr[id]);
    node.probe = T.probes[pi];
    node.rounds = R.level[id];
    for (auto& [dv, cset] : classes) {
      StrategyTree::Edge e;
      e.distances = dv;
      if (cset.size() == 1) {
        e.child = StrategyTree::kCaptured;
      } else {
        std::uint64_t succ = expand_class(T, cset, pi).bits();
        auto it = index.find(succ);
        assert(it != index.end());
        e.child = self(self, it->second);
      }
      node.edges.push_back(std::move(e));
    }
    tree.nodes[static_cast<std::size_t>(ni)] = std::move(node);
    return ni;
  };

  auto root_it = index.find(VertexSet::full(g.order()).bits());
  assert(root_it != index.end() && R.copwin[root_it->second]);
  build(build, root_it->second);
  return tree;
}

RobberCertificate build_certificate(const Graph& g, int k, Variant variant,
                                    const EngineResult& R) {
  RobberCertificate cert;
  cert.n = g.order();
  cert.cops = k;
  cert.variant = variant;
  for (std::uint32_t id = 0; id < R.terr.size(); ++id)
    if (R.scanned[id] && !R.copwin[id]) cert.safe_states.push_back(VertexSet(R.terr[id]));
  std::sort(cert.safe_states.begin(), cert.safe_states.end(),
            [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
  return cert;
}

std::optional<GameVerdict> solve_impl(const Graph& g, int k, Variant variant,
                                      const SolveOptions& opts) {
  check_solvable_input(g, k);
  auto t0 = Clock::now();
  GameTables T = build_tables(g, k, variant);

  EngineConfig cfg;
  cfg.prune = true;
  cfg.budget_secs = opts.budget_secs;
  cfg.max_states = opts.max_states;
  Engine engine(T, cfg);
  EngineResult pruned = engine.run();
  if (pruned.status == EngineStatus::budget) return std::nullopt;

  GameVerdict v;
  v.cop_win = pruned.status == EngineStatus::cop_win;
  v.cops = k;
  v.variant = variant;
  v.stats.visited_states = pruned.terr.size();
  v.stats.rounds = pruned.rounds;

  if (opts.with_evidence) {
    if (v.cop_win) {
      EngineConfig xcfg;
      xcfg.prune = false;
      xcfg.exact_levels = true;
      xcfg.budget_secs = opts.budget_secs;
      xcfg.max_states = opts.max_states;
      Engine exact(T, xcfg);
      EngineResult full = exact.run();
      if (full.status == EngineStatus::budget) return std::nullopt;
      assert(full.status == EngineStatus::cop_win);
      v.strategy = build_strategy(g, k, variant, T, full);
    } else {
      v.certificate = build_certificate(g, k, variant, pruned);
    }
  }
  v.stats.wall_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return v;
}

}  // namespace

GameVerdict cop_win(const Graph& g, int k, Variant variant, const SolveOptions& opts) {
  auto v = solve_impl(g, k, variant, opts);
  if (!v) throw std::runtime_error("cop_win: budget exceeded");
  return *v;
}

std::optional<GameVerdict> try_cop_win(const Graph& g, int k, Variant variant,
                                       const SolveOptions& opts) {
  return solve_impl(g, k, variant, opts);
}

LocalizationResult localization_number(const Graph& g, Variant variant, int k_max,
                                       const SolveOptions& opts) {
  if (g.order() < 1) throw std::invalid_argument("localization_number: empty graph");
  const int kmax_eff = k_max > 0 ? k_max : std::max(1, g.order() - 1);

  LocalizationResult res;
  auto comps = components(g);
  SolveOptions sub = opts;
  sub.with_evidence = false;

  int best = 0;
  for (const auto& comp : comps) {
    Graph cg = comps.size() == 1 ? g : g.induced(comp);
    bool found = false;
    for (int k = 1; k <= kmax_eff; ++k) {
      res.k_searched = std::max(res.k_searched, k);
      auto v = try_cop_win(cg, k, variant, sub);
      if (!v) {
        res.budget_hit = true;
        return res;
      }
      res.stats.visited_states += v->stats.visited_states;
      res.stats.rounds = std::max(res.stats.rounds, v->stats.rounds);
      res.stats.wall_ms += v->stats.wall_ms;
      if (v->cop_win) {
        best = std::max(best, k);
        found = true;
        break;
      }
    }
    if (!found) return res;  // zeta stays empty: k_max exceeded
  }
  res.zeta = best;
  return res;
}

StrategyTree extract_strategy(const Graph& g, int k, Variant variant) {
  check_solvable_input(g, k);
  GameTables T = build_tables(g, k, variant);
  EngineConfig cfg;
  cfg.prune = false;
  cfg.exact_levels = true;
  Engine engine(T, cfg);
  EngineResult full = engine.run();
  if (full.status != EngineStatus::cop_win)
    throw std::logic_error("extract_strategy: not a cop-win instance");
  return build_strategy(g, k, variant, T, full);
}

RobberCertificate extract_certificate(const Graph& g, int k, Variant variant) {
  check_solvable_input(g, k);
  GameTables T = build_tables(g, k, variant);
  EngineConfig cfg;
  cfg.prune = true;
  Engine engine(T, cfg);
  EngineResult r = engine.run();
  if (r.status != EngineStatus::robber_win)
    throw std::logic_error("extract_certificate: not a robber-win instance");
  return build_certificate(g, k, variant, r);
}

}  // namespace locgame
