#include "locgame/designs.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace locgame {

namespace {

struct FieldSpec {
  int q, p, e;
  std::vector<int> poly;  // low-to-high, monic of degree e; empty for e = 1
};

const std::vector<FieldSpec>& field_specs() {
  static const std::vector<FieldSpec> specs = {
      {2, 2, 1, {}},
      {3, 3, 1, {}},
      {4, 2, 2, {1, 1, 1}},        // x^2 + x + 1
      {5, 5, 1, {}},
      {7, 7, 1, {}},
      {8, 2, 3, {1, 1, 0, 1}},     // x^3 + x + 1
      {9, 3, 2, {2, 1, 1}},        // x^2 + x + 2
      {11, 11, 1, {}},
      {13, 13, 1, {}},
      {16, 2, 4, {1, 1, 0, 0, 1}}, // x^4 + x + 1
      {25, 5, 2, {2, 1, 1}},       // x^2 + x + 2
      {27, 3, 3, {1, 2, 0, 1}},    // x^3 + 2x + 1
  };
  return specs;
}

// Polynomial arithmetic on base-p digit vectors.
std::vector<int> digits_of(int a, int p, int e) {
  std::vector<int> d(static_cast<std::size_t>(e));
  for (int i = 0; i < e; ++i) {
    d[static_cast<std::size_t>(i)] = a % p;
    a /= p;
  }
  return d;
}

int value_of(const std::vector<int>& d, int p) {
  int v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

}  // namespace

const std::vector<int>& FiniteField::supported_orders() {
  static const std::vector<int> qs = [] {
    std::vector<int> out;
    for (const auto& s : field_specs()) out.push_back(s.q);
    return out;
  }();
  return qs;
}

FiniteField::FiniteField(int q) {
  const FieldSpec* spec = nullptr;
  for (const auto& s : field_specs())
    if (s.q == q) spec = &s;
  if (!spec) throw std::invalid_argument("make_field: unsupported order " + std::to_string(q));

  q_ = spec->q;
  p_ = spec->p;
  e_ = spec->e;
  poly_ = spec->e > 1 ? spec->poly : std::vector<int>{};

  add_.resize(static_cast<std::size_t>(q_) * static_cast<std::size_t>(q_));
  mul_.resize(static_cast<std::size_t>(q_) * static_cast<std::size_t>(q_));
  neg_.resize(static_cast<std::size_t>(q_));

  for (int a = 0; a < q_; ++a) {
    auto da = digits_of(a, p_, e_);
    for (int b = 0; b < q_; ++b) {
      auto db = digits_of(b, p_, e_);
      // Addition: digitwise mod p.
      std::vector<int> ds(static_cast<std::size_t>(e_));
      for (int i = 0; i < e_; ++i)
        ds[static_cast<std::size_t>(i)] = (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p_;
      add_[idx(a, b)] = value_of(ds, p_);

      // Multiplication: polynomial product reduced by the fixed irreducible.
      std::vector<int> prod(static_cast<std::size_t>(2 * e_ - 1), 0);
      for (int i = 0; i < e_; ++i)
        for (int j = 0; j < e_; ++j)
          prod[static_cast<std::size_t>(i + j)] =
              (prod[static_cast<std::size_t>(i + j)] + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p_;
      for (int d = 2 * e_ - 2; d >= e_; --d) {
        int c = prod[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        prod[static_cast<std::size_t>(d)] = 0;
        // x^d = x^(d-e) * (-(poly minus leading term))
        for (int i = 0; i < e_; ++i) {
          int coef = poly_.empty() ? 0 : poly_[static_cast<std::size_t>(i)];
          prod[static_cast<std::size_t>(d - e_ + i)] =
              ((prod[static_cast<std::size_t>(d - e_ + i)] - c * coef) % p_ + p_) % p_;
        }
      }
      prod.resize(static_cast<std::size_t>(e_));
      mul_[idx(a, b)] = value_of(prod, p_);
    }
    // -a
    auto dn = da;
    for (int i = 0; i < e_; ++i)
      dn[static_cast<std::size_t>(i)] = (p_ - da[static_cast<std::size_t>(i)]) % p_;
    neg_[static_cast<std::size_t>(a)] = value_of(dn, p_);
  }
}

int FiniteField::inv(int a) const {
  if (a == 0) throw std::invalid_argument("FiniteField::inv(0)");
  for (int b = 1; b < q_; ++b)
    if (mul(a, b) == 1) return b;
  throw std::logic_error("FiniteField: no inverse found");
}

FiniteField make_field(int q) { return FiniteField(q); }

ValidationReport validate_design(const Design& d) {
  ValidationReport rep;
  auto entry = [&rep](std::string axiom, bool pass, std::string detail = "") {
    rep.entries.push_back({std::move(axiom), pass, std::move(detail)});
  };

  entry("point count v", static_cast<int>(d.points.size()) == d.v,
        "declared v=" + std::to_string(d.v) + " actual=" + std::to_string(d.points.size()));
  entry("block count b", static_cast<int>(d.blocks.size()) == d.b,
        "declared b=" + std::to_string(d.b) + " actual=" + std::to_string(d.blocks.size()));

  {
    bool ok = true;
    std::string detail;
    for (std::size_t j = 0; j < d.blocks.size() && ok; ++j) {
      const auto& blk = d.blocks[j];
      if (static_cast<int>(blk.size()) != d.k) {
        ok = false;
        detail = "block " + std::to_string(j) + " has size " + std::to_string(blk.size());
      }
      for (int p : blk)
        if (p < 0 || p >= d.v) {
          ok = false;
          detail = "block " + std::to_string(j) + " has out-of-range point";
        }
    }
    entry("block size k", ok, detail);
  }

  {
    std::vector<int> count(static_cast<std::size_t>(std::max(d.v, 0)), 0);
    for (const auto& blk : d.blocks)
      for (int p : blk)
        if (p >= 0 && p < d.v) ++count[static_cast<std::size_t>(p)];
    bool ok = true;
    std::string detail;
    for (int p = 0; p < d.v; ++p)
      if (count[static_cast<std::size_t>(p)] != d.r) {
        ok = false;
        detail = "point " + std::to_string(p) + " lies in " +
                 std::to_string(count[static_cast<std::size_t>(p)]) + " blocks, expected r=" +
                 std::to_string(d.r);
        break;
      }
    entry("replication r", ok, detail);
  }

  {
    std::vector<int> pairs(static_cast<std::size_t>(std::max(d.v, 0)) * static_cast<std::size_t>(std::max(d.v, 0)), 0);
    for (const auto& blk : d.blocks)
      for (std::size_t i = 0; i < blk.size(); ++i)
        for (std::size_t j = i + 1; j < blk.size(); ++j) {
          int a = std::min(blk[i], blk[j]);
          int b2 = std::max(blk[i], blk[j]);
          if (a >= 0 && b2 < d.v)
            ++pairs[static_cast<std::size_t>(a) * static_cast<std::size_t>(d.v) + static_cast<std::size_t>(b2)];
        }
    bool ok = true;
    std::string detail;
    for (int a = 0; a < d.v && ok; ++a)
      for (int b2 = a + 1; b2 < d.v; ++b2)
        if (pairs[static_cast<std::size_t>(a) * static_cast<std::size_t>(d.v) + static_cast<std::size_t>(b2)] != d.lambda) {
          ok = false;
          detail = "pair {" + std::to_string(a) + "," + std::to_string(b2) + "} covered " +
                   std::to_string(pairs[static_cast<std::size_t>(a) * static_cast<std::size_t>(d.v) + static_cast<std::size_t>(b2)]) +
                   " times, expected lambda=" + std::to_string(d.lambda);
          break;
        }
    entry("pair coverage lambda", ok, detail);
  }
  return rep;
}

namespace {

// Normalized homogeneous triples over GF(q), leftmost nonzero = 1, in the
// deterministic order (1,y,z), (0,1,z), (0,0,1).
std::vector<std::array<int, 3>> normalized_points(const FiniteField& f) {
  std::vector<std::array<int, 3>> pts;
  const int q = f.order();
  for (int y = 0; y < q; ++y)
    for (int z = 0; z < q; ++z) pts.push_back({1, y, z});
  for (int z = 0; z < q; ++z) pts.push_back({0, 1, z});
  pts.push_back({0, 0, 1});
  return pts;
}

int dot3(const FiniteField& f, const std::array<int, 3>& a, const std::array<int, 3>& b) {
  int s = 0;
  for (int i = 0; i < 3; ++i) s = f.add(s, f.mul(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]));
  return s;
}

std::string triple_label(const std::array<int, 3>& t) {
  return "(" + std::to_string(t[0]) + ":" + std::to_string(t[1]) + ":" + std::to_string(t[2]) + ")";
}

}  // namespace

Design projective_plane(int q) {
  FiniteField f(q);
  auto pts = normalized_points(f);
  Design d;
  d.v = d.b = q * q + q + 1;
  d.r = d.k = q + 1;
  d.lambda = 1;
  for (const auto& p : pts) d.points.push_back(triple_label(p));
  for (const auto& line : pts) {
    std::vector<int> blk;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (dot3(f, line, pts[i]) == 0) blk.push_back(static_cast<int>(i));
    d.blocks.push_back(std::move(blk));
  }
  return d;
}

Design affine_plane(int q) {
  FiniteField f(q);
  Design d;
  d.v = q * q;
  d.b = q * q + q;
  d.r = q + 1;
  d.k = q;
  d.lambda = 1;
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y)
      d.points.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
  auto point_index = [q](int x, int y) { return x * q + y; };
  for (int m = 0; m < q; ++m)
    for (int c = 0; c < q; ++c) {
      std::vector<int> blk;
      for (int x = 0; x < q; ++x) blk.push_back(point_index(x, f.add(f.mul(m, x), c)));
      std::sort(blk.begin(), blk.end());
      d.blocks.push_back(std::move(blk));
    }
  for (int c = 0; c < q; ++c) {
    std::vector<int> blk;
    for (int y = 0; y < q; ++y) blk.push_back(point_index(c, y));
    d.blocks.push_back(std::move(blk));
  }
  return d;
}

namespace {

// Idempotent commutative quasigroup on Z_m, m odd: x*y = (x+y)/2 mod m.
int bose_op(int x, int y, int m) { return ((x + y) * ((m + 1) / 2)) % m; }

// Half-idempotent commutative quasigroup on Z_m, m = 2t even:
// x*y = s/2 for even s = (x+y) mod m, t + (s-1)/2 for odd s.
int skolem_op(int x, int y, int m) {
  int s = (x + y) % m;
  return (s % 2 == 0) ? s / 2 : m / 2 + (s - 1) / 2;
}

}  // namespace

Design steiner_triple_system(int v) {
  if (v < 7 || (v % 6 != 1 && v % 6 != 3))
    throw std::invalid_argument("steiner_triple_system: v must be 1 or 3 (mod 6), v >= 7");
  Design d;
  d.v = v;
  d.b = v * (v - 1) / 6;
  d.r = (v - 1) / 2;
  d.k = 3;
  d.lambda = 1;

  if (v % 6 == 3) {
    // Bose: points Z_m x {0,1,2}, m = v/3 odd.
    const int m = v / 3;
    auto pt = [m](int i, int c) { return 3 * i + c; };
    for (int i = 0; i < m; ++i)
      for (int c = 0; c < 3; ++c)
        d.points.push_back("(" + std::to_string(i) + "," + std::to_string(c) + ")");
    for (int i = 0; i < m; ++i) d.blocks.push_back({pt(i, 0), pt(i, 1), pt(i, 2)});
    for (int x = 0; x < m; ++x)
      for (int y = x + 1; y < m; ++y)
        for (int c = 0; c < 3; ++c) {
          std::vector<int> blk = {pt(x, c), pt(y, c), pt(bose_op(x, y, m), (c + 1) % 3)};
          std::sort(blk.begin(), blk.end());
          d.blocks.push_back(std::move(blk));
        }
  } else {
    // Skolem: points (Z_2t x {0,1,2}) + one extra point, v = 6t+1.
    const int t = v / 6;
    const int m = 2 * t;
    const int infinity = 3 * m;
    auto pt = [m](int i, int c) { return 3 * i + c; };
    for (int i = 0; i < m; ++i)
      for (int c = 0; c < 3; ++c)
        d.points.push_back("(" + std::to_string(i) + "," + std::to_string(c) + ")");
    d.points.push_back("inf");
    for (int i = 0; i < t; ++i) d.blocks.push_back({pt(i, 0), pt(i, 1), pt(i, 2)});
    for (int i = t; i < m; ++i)
      for (int c = 0; c < 3; ++c) {
        std::vector<int> blk = {infinity, pt(i, c), pt(i - t, (c + 1) % 3)};
        std::sort(blk.begin(), blk.end());
        d.blocks.push_back(std::move(blk));
      }
    for (int x = 0; x < m; ++x)
      for (int y = x + 1; y < m; ++y)
        for (int c = 0; c < 3; ++c) {
          std::vector<int> blk = {pt(x, c), pt(y, c), pt(skolem_op(x, y, m), (c + 1) % 3)};
          std::sort(blk.begin(), blk.end());
          d.blocks.push_back(std::move(blk));
        }
  }
  return d;
}

Graph incidence_graph(const Design& d) {
  const int n = d.v + d.b;
  if (n > Graph::kMaxVertices)
    throw SizeLimitError("incidence_graph: v + b exceeds 64 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j < d.b; ++j)
    for (int p : d.blocks[static_cast<std::size_t>(j)]) edges.emplace_back(p, d.v + j);
  std::vector<std::string> labels = d.points;
  for (int j = 0; j < d.b; ++j) labels.push_back("B" + std::to_string(j));
  return Graph(n, edges, labels);
}

PolarityMap orthogonal_polarity(int q) {
  // Points and lines share the normalized-triple indexing, so the identity
  // Gram matrix pairs index i with index i.
  FiniteField f(q);
  auto pts = normalized_points(f);
  PolarityMap pm;
  pm.point_to_line.resize(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) pm.point_to_line[i] = static_cast<int>(i);
  return pm;
}

Graph polarity_graph(int q) {
  FiniteField f(q);
  auto pts = normalized_points(f);
  const int n = static_cast<int>(pts.size());
  if (n > Graph::kMaxVertices) throw SizeLimitError("polarity_graph: too many vertices");
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;
  for (const auto& p : pts) labels.push_back(triple_label(p));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (dot3(f, pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]) == 0)
        edges.emplace_back(i, j);
  return Graph(n, edges, labels);
}

std::vector<SymmetricBibdEntry> symmetric_bibd_families() {
  std::vector<SymmetricBibdEntry> out;
  for (int q : {2, 3, 4}) {
    SymmetricBibdEntry e;
    e.design = projective_plane(q);
    e.expected_zeta = q + 1;
    e.note = "symmetric lambda=1 designs are exactly projective planes; PG(2," +
             std::to_string(q) + ") with k=" + std::to_string(q + 1);
    out.push_back(std::move(e));
  }
  return out;
}

std::string write_design_text(const Design& d) {
  std::ostringstream out;
  out << d.v << ' ' << d.b << ' ' << d.r << ' ' << d.k << ' ' << d.lambda << '\n';
  for (const auto& blk : d.blocks) {
    for (std::size_t i = 0; i < blk.size(); ++i) out << (i ? " " : "") << blk[i];
    out << '\n';
  }
  return out.str();
}

Design read_design_text(const std::string& text) {
  std::istringstream in(text);
  Design d;
  std::string header;
  if (!std::getline(in, header)) throw std::invalid_argument("design text: missing header");
  {
    std::istringstream h(header);
    if (!(h >> d.v >> d.b >> d.r >> d.k >> d.lambda))
      throw std::invalid_argument("design text: bad header");
  }
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<int> blk;
    int p;
    while (ls >> p) blk.push_back(p);
    d.blocks.push_back(std::move(blk));
  }
  for (int i = 0; i < d.v; ++i) d.points.push_back("p" + std::to_string(i));
  return d;
}

}  // namespace locgame
