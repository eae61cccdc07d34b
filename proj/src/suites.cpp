#include "locgame/suites.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include "locgame/designs.hpp"
#include "locgame/generators.hpp"
#include "locgame/invariants.hpp"
#include "locgame/reference.hpp"
#include "locgame/solver.hpp"

namespace locgame {

namespace {

// Folds per-graph check_bounds reports into one row per theorem id.
class Aggregator {
 public:
  void add(const BoundReport& rep, const std::string& instance) {
    for (const auto& e : rep.entries) {
      auto& s = rows_[e.id];
      s.statement = e.statement;
      if (!e.applicable) {
        ++s.informational;
        continue;
      }
      ++s.checked;
      if (!e.pass && s.first_failure.empty())
        s.first_failure = instance + ": " + e.lhs + " vs " + e.rhs;
      if (!e.pass) ++s.failures;
    }
  }

  void flush_into(BoundReport& out) const {
    for (const auto& [id, s] : rows_) {
      BoundEntry e;
      e.id = id;
      e.statement = s.statement;
      if (s.checked == 0) {
        e.applicable = false;
        e.details = "informational only";
      } else {
        e.applicable = true;
        e.pass = s.failures == 0;
        e.lhs = std::to_string(s.failures) + " violations";
        e.rhs = std::to_string(s.checked) + " checks";
        e.details = s.first_failure;
      }
      out.entries.push_back(std::move(e));
    }
  }

 private:
  struct Row {
    std::string statement;
    int checked = 0;
    int failures = 0;
    int informational = 0;
    std::string first_failure;
  };
  std::map<std::string, Row> rows_;
};

BoundInputs measure(const Graph& g, FamilyContext fam = {}) {
  BoundInputs in;
  in.n = g.order();
  in.family = fam;
  in.stats = graph_stats(g);

  auto loc = localization_number(g);
  if (loc.zeta) in.zeta = *loc.zeta;
  auto locnb = localization_number(g, Variant::no_backtrack);
  if (locnb.zeta) in.zeta_no_backtrack = *locnb.zeta;

  try {
    in.beta = metric_dimension(g);
  } catch (const SizeLimitError&) {
  }
  try {
    in.chi = chromatic_number(g);
  } catch (const SizeLimitError&) {
  }
  try {
    in.pw = pathwidth(g);
  } catch (const SizeLimitError&) {
  }
  return in;
}

void entry(BoundReport& rep, std::string id, std::string statement, bool applicable, bool pass,
           std::string lhs = "", std::string rhs = "", std::string details = "") {
  rep.entries.push_back({std::move(id), std::move(statement), applicable, applicable && pass,
                         std::move(lhs), std::move(rhs), std::move(details)});
}

bool c4_free(const Graph& g) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if ((g.neighbors(u) & g.neighbors(v)).size() >= 2) return false;
  return true;
}

// Solve zeta within a wall-clock budget; empty when the budget ran out.
std::optional<int> budgeted_zeta(const Graph& g, double budget_secs, Variant variant,
                                 bool* skipped) {
  SolveOptions opts;
  opts.with_evidence = false;
  opts.budget_secs = budget_secs;
  auto loc = localization_number(g, variant, 0, opts);
  if (loc.budget_hit) {
    if (skipped) *skipped = true;
    return std::nullopt;
  }
  return loc.zeta;
}

}  // namespace

SuiteResult run_corpus_suite(const SuiteOptions& opts) {
  SuiteResult res;
  res.report.context = "corpus suite: connected graphs n<=" + std::to_string(opts.max_n) +
                       " plus " + std::to_string(opts.random_count) + " random n in {6,7}, seed " +
                       std::to_string(opts.seed);

  std::vector<Graph> corpus;
  for (int n = 1; n <= std::min(opts.max_n, 6); ++n)
    for (auto& g : enumerate_connected_graphs(n)) corpus.push_back(std::move(g));
  const std::size_t exhaustive_count = corpus.size();
  for (auto& g : random_connected_graphs(opts.random_count, {6, 7}, opts.seed))
    corpus.push_back(std::move(g));

  std::vector<BoundInputs> inputs(corpus.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::size_t i = 0; i < corpus.size(); ++i) inputs[i] = measure(corpus[i]);

  Aggregator agg;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    agg.add(check_bounds(inputs[i]),
            (i < exhaustive_count ? "corpus graph #" : "random graph #") + std::to_string(i));
  agg.flush_into(res.report);

  // Pruned engine vs the plain reference oracle, k = 1..3.
  {
    int checks = 0, mismatches = 0;
    std::string first;
    std::vector<std::array<int, 3>> verdicts(corpus.size());
    SolveOptions fast;
    fast.with_evidence = false;
#pragma omp parallel for schedule(dynamic, 4)
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      for (int k = 1; k <= 3; ++k) {
        bool a = cop_win(corpus[i], k, Variant::standard, fast).cop_win;
        bool b = reference_cop_win(corpus[i], k, Variant::standard);
        verdicts[i][static_cast<std::size_t>(k - 1)] = a == b ? 1 : 0;
      }
    }
    for (std::size_t i = 0; i < corpus.size(); ++i)
      for (int k = 1; k <= 3; ++k) {
        ++checks;
        if (!verdicts[i][static_cast<std::size_t>(k - 1)]) {
          ++mismatches;
          if (first.empty())
            first = "graph #" + std::to_string(i) + " k=" + std::to_string(k);
        }
      }
    entry(res.report, "oracle-equivalence",
          "pruned engine verdict = reference value iteration (k <= 3)", true, mismatches == 0,
          std::to_string(mismatches) + " mismatches", std::to_string(checks) + " checks", first);
  }
  return res;
}

SuiteResult run_trees_suite(const SuiteOptions& opts) {
  SuiteResult res;
  const int max_n = std::min(std::max(opts.max_n, 7), 9);
  res.report.context = "trees suite: all trees with n<=" + std::to_string(max_n) +
                       "; derivation corpus n<=13";

  Aggregator agg;
  int idx = 0;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& t : enumerate_trees(n)) {
      BoundInputs in = measure(t, {.kind = FamilyContext::Kind::tree});
      agg.add(check_bounds(in), "tree #" + std::to_string(idx++));
    }
  agg.flush_into(res.report);

  // The minimal two-cop tree has 10 vertices; derive over the full n<=13
  // corpus regardless of the per-tree bound cap above.
  T3Report t3 = derive_T3(13);
  entry(res.report, "tree-zeta-range", "every tree needs one or two cops", true,
        t3.all_zeta_in_12, "", std::to_string(t3.corpus_size) + " trees");
  entry(res.report, "tree-minimal-unique",
        "a single subtree-minimal two-cop tree exists in the corpus", true,
        t3.minimal.size() == 1, std::to_string(t3.minimal.size()) + " minimal", "1", t3.detail);
  entry(res.report, "tree-characterization",
        "zeta(T) = 2 iff T contains the derived minimal tree", true, t3.biconditional, "", "",
        t3.detail);
  return res;
}

SuiteResult run_designs_suite(const SuiteOptions& opts) {
  SuiteResult res;
  res.report.context = "designs suite: max_q=" + std::to_string(opts.max_q);

  auto validation_entry = [&res](const std::string& name, const Design& d) {
    auto v = validate_design(d);
    std::string detail;
    for (const auto& e : v.entries)
      if (!e.pass) detail = e.axiom + ": " + e.detail;
    entry(res.report, "validate-" + name,
          "design axioms (sizes, replication, pair coverage) for " + name, true, v.all_pass(),
          "", "", detail);
  };

  for (int q : {2, 3, 4}) validation_entry("PG(2," + std::to_string(q) + ")", projective_plane(q));
  for (int q : {2, 3}) validation_entry("AG(2," + std::to_string(q) + ")", affine_plane(q));
  for (int v : {7, 9, 13, 15})
    validation_entry("STS(" + std::to_string(v) + ")", steiner_triple_system(v));

  // Exact localization values where the solve fits the budget. PG(2,2) and
  // AG(2,2) are always attempted; order 3 planes are stretch instances.
  struct PlaneJob {
    std::string name;
    int q;
    bool projective;
    bool stretch;
  };
  std::vector<PlaneJob> jobs;
  jobs.push_back({"PG(2,2)", 2, true, false});
  jobs.push_back({"AG(2,2)", 2, false, false});
  if (opts.max_q >= 3) {
    jobs.push_back({"AG(2,3)", 3, false, true});
    jobs.push_back({"PG(2,3)", 3, true, true});
  }

  for (const auto& job : jobs) {
    Design d = job.projective ? projective_plane(job.q) : affine_plane(job.q);
    Graph g = incidence_graph(d);
    FamilyContext fam;
    fam.kind = job.projective ? FamilyContext::Kind::projective_plane_incidence
                              : FamilyContext::Kind::affine_plane_incidence;
    fam.q = job.q;
    fam.v = d.v;
    fam.b = d.b;
    fam.r = d.r;
    fam.k = d.k;
    fam.lambda = d.lambda;

    bool skipped = false;
    BoundInputs in;
    in.n = g.order();
    in.family = fam;
    in.stats = graph_stats(g);
    in.zeta = budgeted_zeta(g, job.stretch ? opts.budget_secs : 0, Variant::standard, &skipped);
    if (skipped) {
      res.budget_skipped = true;
      entry(res.report, "zeta-" + job.name, "exact localization value", false, false, "", "",
            "skipped: budget");
      continue;
    }
    try {
      in.chi = chromatic_number(g);
    } catch (const SizeLimitError&) {
    }
    BoundReport sub = check_bounds(in);
    for (auto& e : sub.entries) {
      e.id += "-" + job.name;
      res.report.entries.push_back(std::move(e));
    }
  }

  // STS rows beyond the solvable scale are informational.
  for (int v : {13, 15}) {
    Design d = steiner_triple_system(v);
    FamilyContext fam;
    fam.kind = FamilyContext::Kind::sts_incidence;
    fam.v = d.v;
    fam.b = d.b;
    fam.r = d.r;
    fam.k = d.k;
    fam.lambda = d.lambda;
    BoundInputs in;
    in.n = d.v + d.b;
    in.family = fam;
    BoundReport sub = check_bounds(in);
    for (auto& e : sub.entries) {
      e.id += "-STS(" + std::to_string(v) + ")";
      res.report.entries.push_back(std::move(e));
    }
  }
  return res;
}

SuiteResult run_polarity_suite(const SuiteOptions& opts) {
  SuiteResult res;
  res.report.context = "polarity suite: q in {2.." + std::to_string(std::max(opts.max_q, 2)) + "}";
  for (int q : {2, 3, 4, 5}) {
    if (q > std::max(opts.max_q, 2)) break;
    Graph g = polarity_graph(q);
    const std::string name = "q=" + std::to_string(q);

    entry(res.report, "polarity-order-" + name, "polarity graph has q^2+q+1 vertices", true,
          g.order() == q * q + q + 1, std::to_string(g.order()), std::to_string(q * q + q + 1));
    {
      int deg_q = 0;
      bool spectrum = true;
      for (int v = 0; v < g.order(); ++v) {
        int d = g.degree(v);
        if (d == q)
          ++deg_q;
        else if (d != q + 1)
          spectrum = false;
      }
      entry(res.report, "polarity-degrees-" + name,
            "degrees are q or q+1, with q+1 absolute points", true,
            spectrum && deg_q == q + 1, std::to_string(deg_q) + " of degree q",
            std::to_string(q + 1));
    }
    entry(res.report, "polarity-c4free-" + name, "polarity graph is C4-free", true, c4_free(g));
    {
      auto st = graph_stats(g);
      entry(res.report, "polarity-diameter-" + name, "polarity graph has diameter 2", true,
            st.diameter && *st.diameter == 2,
            st.diameter ? std::to_string(*st.diameter) : "inf", "2");
    }

    bool skipped = false;
    std::optional<int> zeta =
        budgeted_zeta(g, q >= 3 ? opts.budget_secs : 0, Variant::standard, &skipped);
    if (skipped) res.budget_skipped = true;
    BoundInputs in;
    in.n = g.order();
    in.zeta = zeta;
    in.family.kind = FamilyContext::Kind::polarity;
    in.family.q = q;
    BoundReport sub = check_bounds(in);
    for (auto& e : sub.entries) {
      e.id += "-" + name;
      if (skipped) e.details = "skipped: budget";
      res.report.entries.push_back(std::move(e));
    }
  }
  return res;
}

SuiteResult run_hypercube_suite(const SuiteOptions& opts) {
  SuiteResult res;
  res.report.context = "hypercube suite";
  for (int d : {3, 4}) {
    Graph g = generate(Family::hypercube, {d});
    bool stretch = d >= 4;
    bool skipped = false;
    BoundInputs in;
    in.n = g.order();
    in.family.kind = FamilyContext::Kind::hypercube;
    in.family.dim = d;
    in.zeta = budgeted_zeta(g, stretch ? opts.budget_secs : 0, Variant::standard, &skipped);
    if (skipped) {
      res.budget_skipped = true;
      entry(res.report, "hypercube-range-Q" + std::to_string(d), "localization range of Q_d",
            false, false, "", "", "skipped: budget");
      continue;
    }
    BoundReport sub = check_bounds(in);
    for (auto& e : sub.entries) {
      e.id += "-Q" + std::to_string(d);
      res.report.entries.push_back(std::move(e));
    }
  }
  return res;
}

SuiteResult run_kneser_suite(const SuiteOptions& opts) {
  SuiteResult res;
  res.report.context = "kneser suite: K(2,n)";

  // Diameter-2 structure holds exactly from n = 3k on; exhaustive for k=2.
  for (int n : {6, 7, 8}) {
    Graph g = generate(Family::kneser, {2, n});
    auto st = graph_stats(g);
    entry(res.report, "kneser-diameter-n" + std::to_string(n),
          "K(2,n) has diameter 2 for n >= 6", true, st.diameter && *st.diameter == 2,
          st.diameter ? std::to_string(*st.diameter) : "inf", "2");
  }

  for (int n : {5, 6}) {
    Graph g = generate(Family::kneser, {2, n});
    bool stretch = n >= 6;
    bool skipped = false;
    BoundInputs in;
    in.n = g.order();
    in.family.kind = FamilyContext::Kind::kneser;
    in.family.k_subset = 2;
    in.family.ground = n;
    in.stats = graph_stats(g);
    in.zeta = budgeted_zeta(g, stretch ? opts.budget_secs : 0, Variant::standard, &skipped);
    if (skipped) {
      res.budget_skipped = true;
      entry(res.report, "kneser-zeta-n" + std::to_string(n), "exact localization value",
            false, false, "", "", "skipped: budget");
      continue;
    }
    try {
      in.beta = metric_dimension(g);
    } catch (const SizeLimitError&) {
    }
    try {
      in.chi = chromatic_number(g);
    } catch (const SizeLimitError&) {
    }
    BoundReport sub = check_bounds(in);
    for (auto& e : sub.entries) {
      e.id += "-K(2," + std::to_string(n) + ")";
      res.report.entries.push_back(std::move(e));
    }
  }
  return res;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "corpus") return run_corpus_suite(opts);
  if (name == "trees") return run_trees_suite(opts);
  if (name == "designs") return run_designs_suite(opts);
  if (name == "polarity") return run_polarity_suite(opts);
  if (name == "hypercube") return run_hypercube_suite(opts);
  if (name == "kneser") return run_kneser_suite(opts);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace locgame
