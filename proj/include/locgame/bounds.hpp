#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "locgame/graph.hpp"

namespace locgame {

// Where an instance came from, for the family-specific rows of the report.
struct FamilyContext {
  enum class Kind {
    none,
    tree,
    star,
    hypercube,
    kneser,
    projective_plane_incidence,
    affine_plane_incidence,
    sts_incidence,
    bibd_incidence,
    polarity,
  };
  Kind kind = Kind::none;
  int q = 0;                      // plane / polarity order
  int dim = 0;                    // hypercube dimension
  int leaves = 0;                 // star
  int k_subset = 0, ground = 0;   // kneser parameters (k, n)
  int v = 0, b = 0, r = 0, k = 0, lambda = 0;  // design parameters
};

struct BoundInputs {
  int n = 0;  // graph order
  std::optional<int> zeta;
  std::optional<int> zeta_no_backtrack;
  std::optional<int> beta;
  std::optional<int> chi;
  std::optional<int> pw;
  std::optional<GraphStats> stats;
  FamilyContext family;
};

struct BoundEntry {
  std::string id;
  std::string statement;  // the checked relation, plain ASCII
  bool applicable = false;
  bool pass = false;  // meaningful only when applicable
  std::string lhs, rhs;
  std::string details;
};

struct BoundReport {
  std::string context;
  std::vector<BoundEntry> entries;

  int applicable_count() const;
  int failure_count() const;
  bool all_pass() const;
};

// One entry per theorem that applies to the given inputs. Exact-value rows
// assert equality, bound rows assert the inequality; asymptotic rows are
// emitted with applicable=false and never asserted.
BoundReport check_bounds(const BoundInputs& in);

std::string report_table(const BoundReport& r);
nlohmann::ordered_json report_to_json(const BoundReport& r);

// Reconstructs the minimal two-cop tree from the corpus: solves every tree
// with up to max_n vertices (7 <= max_n <= 13), collects the subtree-minimal
// ones among those needing two cops, and tests the characterization
// "needs two cops iff it contains the minimal tree" across the corpus.
// The minimal two-cop tree has 10 vertices, so max_n <= 9 reports an empty
// derivation.
struct T3Report {
  int corpus_size = 0;
  bool all_zeta_in_12 = false;      // every tree solved with 1 or 2 cops
  std::vector<Graph> minimal;       // subtree-minimal two-cop trees
  bool biconditional = false;       // single minimal tree characterizes
  std::string detail;
};

T3Report derive_T3(int max_n);

}  // namespace locgame
