#pragma once

#include <string>
#include <vector>

#include "locgame/graph.hpp"

namespace locgame {

// Finite field GF(q) for the prime powers used by the plane constructions.
// Elements are 0..q-1; for q = p^e with e > 1, the element with base-p digits
// (c0, c1, ..) is c0 + c1*p + .. and arithmetic reduces modulo a fixed
// irreducible polynomial per order.
class FiniteField {
 public:
  explicit FiniteField(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int extension_degree() const { return e_; }
  // Low-to-high coefficients of the reduction polynomial (empty when e = 1).
  const std::vector<int>& reduction_poly() const { return poly_; }

  int add(int a, int b) const { return add_[idx(a, b)]; }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int inv(int a) const;

  static const std::vector<int>& supported_orders();

 private:
  std::size_t idx(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + static_cast<std::size_t>(b);
  }
  int q_, p_, e_;
  std::vector<int> poly_;
  std::vector<int> add_, mul_, neg_;
};

FiniteField make_field(int q);

// Point set with labels, block set as point-index lists, and the declared
// (v, b, r, k, lambda) parameters. validate_design checks the declaration.
struct Design {
  std::vector<std::string> points;
  std::vector<std::vector<int>> blocks;
  int v = 0, b = 0, r = 0, k = 0, lambda = 0;
};

struct ValidationReport {
  struct Entry {
    std::string axiom;
    bool pass;
    std::string detail;  // first counterexample on failure
  };
  std::vector<Entry> entries;
  bool all_pass() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
};

ValidationReport validate_design(const Design& d);

// Projective plane of order q: points are the normalized 1-dimensional
// subspaces of GF(q)^3, lines their duals. v = b = q^2+q+1, r = k = q+1.
Design projective_plane(int q);

// Affine plane of order q: points GF(q)^2, lines y = m*x + c and x = c.
// v = q^2, b = q^2+q, r = q+1, k = q.
Design affine_plane(int q);

// Steiner triple system: Bose construction for v = 3 (mod 6), Skolem
// construction for v = 1 (mod 6); v >= 7.
Design steiner_triple_system(int v);

// Bipartite incidence graph: point vertices 0..v-1 first, block vertices
// after, labels preserved.
Graph incidence_graph(const Design& d);

// Point->line bijection of PG(2,q) under the orthogonal polarity (identity
// Gram matrix): point (a:b:c) maps to the line with coefficients (a,b,c).
struct PolarityMap {
  std::vector<int> point_to_line;
};

PolarityMap orthogonal_polarity(int q);

// Graph on the points of PG(2,q): u ~ v iff u lies on the polar line of v
// and u != v. Absolute points (on their own polar) have degree q, the rest
// q+1; the graph is C4-free with diameter 2.
Graph polarity_graph(int q);

struct SymmetricBibdEntry {
  Design design;
  int expected_zeta;  // = k = q+1
  std::string note;
};

// The symmetric lambda=1 designs constructible at this scale. Symmetric
// lambda=1 designs are exactly projective planes, so these are PG(2,q).
std::vector<SymmetricBibdEntry> symmetric_bibd_families();

// Line-oriented text format: header "v b r k lambda", then one block per
// line as space-separated point indices.
std::string write_design_text(const Design& d);
Design read_design_text(const std::string& text);

}  // namespace locgame
