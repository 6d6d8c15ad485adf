#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "geomcfg/exact.hpp"
#include "geomcfg/gf.hpp"
#include "geomcfg/incidence.hpp"

namespace geomcfg {

/// Points of P^n with exact integer homogeneous coordinates, gcd-reduced and
/// sign-normalized so representatives are unique.
struct RationalPointSet {
  int n = 0;  // ambient projective dimension
  IntMat points;

  void add(IntVec p) {
    reduce_primitive(p);
    bool nonzero = false;
    for (const BigInt& x : p) nonzero |= (x != 0);
    require(nonzero, "InvalidParams", "zero vector is not a projective point");
    points.push_back(std::move(p));
  }
};

/// A block for incidence extraction: either a subspace spanned by a subset of
/// the points, or a hyperplane given by its coefficient vector.
struct BlockSpec {
  std::variant<std::vector<int>, IntVec> data;  // spanning point indices | coefficients

  static BlockSpec span(std::vector<int> idx) { return BlockSpec{std::move(idx)}; }
  static BlockSpec hyperplane(IntVec coeff) { return BlockSpec{std::move(coeff)}; }
};

/// Membership decided by exact integer rank computations; no floating point.
inline IncidenceStructure extract_incidence(const RationalPointSet& pts,
                                            const std::vector<BlockSpec>& blocks,
                                            int workers = 1) {
  int v = static_cast<int>(pts.points.size());
  int b = static_cast<int>(blocks.size());
  require(v >= 1 && b >= 1, "InvalidDims", "need points and blocks");
  IncidenceStructure out(v, b);
  std::vector<std::vector<char>> hits(static_cast<std::size_t>(b),
                                      std::vector<char>(static_cast<std::size_t>(v), 0));
  parallel_for(static_cast<std::size_t>(b), workers, [&](std::size_t j) {
    const BlockSpec& blk = blocks[j];
    if (std::holds_alternative<IntVec>(blk.data)) {
      const IntVec& coeff = std::get<IntVec>(blk.data);
      require(coeff.size() == static_cast<std::size_t>(pts.n) + 1, "DimensionMismatch",
              "hyperplane coefficient length");
      for (int x = 0; x < v; ++x)
        hits[j][static_cast<std::size_t>(x)] = dot(coeff, pts.points[static_cast<std::size_t>(x)]) == 0;
    } else {
      const auto& span_idx = std::get<std::vector<int>>(blk.data);
      IntMat span;
      for (int i : span_idx) {
        require(i >= 0 && i < v, "IndexOutOfRange", "spanning index");
        span.push_back(pts.points[static_cast<std::size_t>(i)]);
      }
      int base_rank = bareiss_rank(span);
      for (int x = 0; x < v; ++x) {
        IntMat ext = span;
        ext.push_back(pts.points[static_cast<std::size_t>(x)]);
        hits[j][static_cast<std::size_t>(x)] = bareiss_rank(std::move(ext)) == base_rank;
      }
    }
  });
  for (int j = 0; j < b; ++j)
    for (int x = 0; x < v; ++x)
      if (hits[static_cast<std::size_t>(j)][static_cast<std::size_t>(x)]) out.inc.set(x, j, true);
  return out;
}

// ---------------------------------------------------------------------------
// Ceva

/// Ceva(n) in the additive model: points are triples (a,b,c) in (Z/n)^3 with
/// a+b+c = 0, blocks are the 3n pairs (axis i, value alpha), and (a,b,c) lies
/// on (0,a), (1,b), (2,c). An (n^2_3, 3n_n) configuration.
inline IncidenceStructure ceva(int n) {
  require(n >= 2, "InvalidN", "ceva needs n >= 2");
  IncidenceStructure s(n * n, 3 * n);
  int x = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int c = ((-(a + b)) % n + n) % n;
      s.inc.set(x, 0 * n + a, true);
      s.inc.set(x, 1 * n + b, true);
      s.inc.set(x, 2 * n + c, true);
      s.point_labels.push_back("p(" + std::to_string(a) + "," + std::to_string(b) + "," +
                               std::to_string(c) + ")");
      ++x;
    }
  for (int i = 0; i < 3; ++i)
    for (int a = 0; a < n; ++a)
      s.block_labels.push_back("L" + std::to_string(i) + "," + std::to_string(a));
  return s;
}

struct CevaRealization {
  IncidenceStructure extracted;
  int concurrency_constant = -1;  // field element c with: concurrent iff alpha*beta*gamma = c
  int q = 0;
};

/// Realizes Ceva(n) over GF(q) (needs n | q-1): builds the 3n lines through
/// the coordinate triangle and the n-th roots of unity, finds all concurrency
/// points by exact field linear algebra, and reports the observed constant c
/// in "concurrent iff alpha beta gamma = c".
inline CevaRealization ceva_realize(int n, const FieldTable& f) {
  require(n >= 2, "InvalidN", "ceva needs n >= 2");
  require((f.q() - 1) % n == 0, "RootsUnavailable", "need n | q-1 so mu_n lies in GF(q)");
  int order = f.q() - 1;
  std::vector<int> mu;
  for (int e = 0; e < n; ++e) mu.push_back(f.pow(f.generator(), (order / n) * e));
  std::sort(mu.begin(), mu.end());
  // line coefficient vectors: L0,a: a*x1 - x2; L1,a: a*x2 - x0; L2,a: a*x0 - x1
  std::vector<std::array<int, 3>> lines;
  for (int i = 0; i < 3; ++i)
    for (int a : mu) {
      std::array<int, 3> c{0, 0, 0};
      c[static_cast<std::size_t>((i + 1) % 3)] = a;
      c[static_cast<std::size_t>((i + 2) % 3)] = f.neg(1);
      lines.push_back(c);
    }
  auto eval = [&](const std::array<int, 3>& c, const std::array<int, 3>& p) {
    int acc = 0;
    for (int t = 0; t < 3; ++t) acc = f.add(acc, f.mul(c[static_cast<std::size_t>(t)], p[static_cast<std::size_t>(t)]));
    return acc;
  };
  auto cross = [&](const std::array<int, 3>& u, const std::array<int, 3>& w) {
    std::array<int, 3> p;
    p[0] = f.sub(f.mul(u[1], w[2]), f.mul(u[2], w[1]));
    p[1] = f.sub(f.mul(u[2], w[0]), f.mul(u[0], w[2]));
    p[2] = f.sub(f.mul(u[0], w[1]), f.mul(u[1], w[0]));
    return p;
  };
  std::set<std::array<int, 3>> point_set;
  std::set<int> constants;
  for (int ia = 0; ia < n; ++ia)
    for (int ib = 0; ib < n; ++ib)
      for (int ic = 0; ic < n; ++ic) {
        const auto& l0 = lines[static_cast<std::size_t>(ia)];
        const auto& l1 = lines[static_cast<std::size_t>(n + ib)];
        const auto& l2 = lines[static_cast<std::size_t>(2 * n + ic)];
        std::array<int, 3> p = cross(l0, l1);
        if (p[0] == 0 && p[1] == 0 && p[2] == 0) continue;
        if (eval(l2, p) != 0) continue;
        // normalize: first nonzero coordinate 1
        std::vector<int> pv{p[0], p[1], p[2]};
        pv = normalize_projective(pv, f);
        point_set.insert({pv[0], pv[1], pv[2]});
        constants.insert(f.mul(f.mul(mu[static_cast<std::size_t>(ia)], mu[static_cast<std::size_t>(ib)]),
                               mu[static_cast<std::size_t>(ic)]));
      }
  require(constants.size() == 1, "InternalError", "concurrency constant is not constant");
  CevaRealization out;
  out.q = f.q();
  out.concurrency_constant = *constants.begin();
  std::vector<std::array<int, 3>> points(point_set.begin(), point_set.end());
  out.extracted = IncidenceStructure(static_cast<int>(points.size()), 3 * n);
  for (int x = 0; x < out.extracted.v; ++x)
    for (int j = 0; j < 3 * n; ++j)
      if (eval(lines[static_cast<std::size_t>(j)], points[static_cast<std::size_t>(x)]) == 0)
        out.extracted.inc.set(x, j, true);
  return out;
}

// ---------------------------------------------------------------------------
// Modular coset configurations

struct ModularCosetSystem {
  int n = 0;
  std::vector<std::vector<int>> subgroups;  // each as sorted list of codes a*N+b
  std::vector<std::vector<int>> cosets;     // flattened, owner-subgroup major
  std::vector<int> coset_owner;
};

/// All cyclic subgroups of order exactly N in (Z/N)^2, deduplicated; their
/// count matches N * prod_{p | N} (1 + 1/p).
inline ModularCosetSystem modular_cosets(int n) {
  require(n >= 2 && n <= 64, "NOutOfRange", "modular level capped");
  ModularCosetSystem sys;
  sys.n = n;
  std::set<std::vector<int>> subgroup_set;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == 0 && b == 0) continue;
      std::vector<int> elems;
      int x = 0, y = 0;
      do {
        elems.push_back(x * n + y);
        x = (x + a) % n;
        y = (y + b) % n;
      } while (x != 0 || y != 0);
      if (static_cast<int>(elems.size()) != n) continue;
      std::sort(elems.begin(), elems.end());
      subgroup_set.insert(std::move(elems));
    }
  sys.subgroups.assign(subgroup_set.begin(), subgroup_set.end());
  for (int h = 0; h < static_cast<int>(sys.subgroups.size()); ++h) {
    const auto& sub = sys.subgroups[static_cast<std::size_t>(h)];
    std::vector<char> done(static_cast<std::size_t>(n * n), 0);
    for (int g = 0; g < n * n; ++g) {
      if (done[static_cast<std::size_t>(g)]) continue;
      int gx = g / n, gy = g % n;
      std::vector<int> coset;
      for (int e : sub) {
        int ex = e / n, ey = e % n;
        int c = ((gx + ex) % n) * n + (gy + ey) % n;
        coset.push_back(c);
        done[static_cast<std::size_t>(c)] = 1;
      }
      std::sort(coset.begin(), coset.end());
      sys.cosets.push_back(std::move(coset));
      sys.coset_owner.push_back(h);
    }
  }
  return sys;
}

/// Eq.-style closed form for the number of cyclic order-N subgroups of
/// (Z/N)^2: N * prod over primes p | N of (1 + 1/p).
inline long long subgroup_count_formula(int n) {
  long long num = n, den = 1;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      num *= p + 1;
      den *= p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) {
    num *= m + 1;
    den *= m;
  }
  return num / den;
}

/// The (N s(N)_N, N^2_{s(N)}) configuration: cosets against group elements,
/// incidence by membership.
inline IncidenceStructure modular_config(int n) {
  require(n >= 2 && n <= 12, "NOutOfRange", "modular_config supports 2 <= N <= 12");
  ModularCosetSystem sys = modular_cosets(n);
  IncidenceStructure s(static_cast<int>(sys.cosets.size()), n * n);
  for (int x = 0; x < s.v; ++x)
    for (int e : sys.cosets[static_cast<std::size_t>(x)]) s.inc.set(x, e, true);
  return s;
}

// ---------------------------------------------------------------------------
// Desargues

/// Abstract Desargues 10_3: 2-subsets of [1,5] against 3-subsets, incidence
/// by containment.
inline IncidenceStructure desargues() {
  std::vector<std::array<int, 2>> duads;
  for (int a = 1; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b) duads.push_back({a, b});
  std::vector<std::array<int, 3>> triads;
  for (int a = 1; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b)
      for (int c = b + 1; c <= 5; ++c) triads.push_back({a, b, c});
  IncidenceStructure s(10, 10);
  for (int x = 0; x < 10; ++x) {
    for (int j = 0; j < 10; ++j) {
      const auto& t = triads[static_cast<std::size_t>(j)];
      bool in1 = std::find(t.begin(), t.end(), duads[static_cast<std::size_t>(x)][0]) != t.end();
      bool in2 = std::find(t.begin(), t.end(), duads[static_cast<std::size_t>(x)][1]) != t.end();
      if (in1 && in2) s.inc.set(x, j, true);
    }
    s.point_labels.push_back("p" + std::to_string(duads[static_cast<std::size_t>(x)][0]) +
                             std::to_string(duads[static_cast<std::size_t>(x)][1]));
  }
  for (int j = 0; j < 10; ++j)
    s.block_labels.push_back("l" + std::to_string(triads[static_cast<std::size_t>(j)][0]) +
                             std::to_string(triads[static_cast<std::size_t>(j)][1]) +
                             std::to_string(triads[static_cast<std::size_t>(j)][2]));
  return s;
}

struct DesarguesRealization {
  RationalPointSet points;        // the ten cut points p_ij in the plane pi
  std::vector<BlockSpec> lines;   // the ten cut lines l_ijk
  IncidenceStructure extracted;
};

/// Realized Desargues configuration: the lines spanned by pairs of
/// e_1..e_4, e_5 = e_1+e_2+e_3+e_4 are cut by the fixed plane with
/// coefficients (1,2,4,8); all incidences are extracted by exact rank tests.
inline DesarguesRealization desargues_realize() {
  const std::array<long long, 4> plane = {1, 2, 4, 8};
  IntMat basis(5, IntVec(4, 0));
  for (int i = 0; i < 4; ++i) basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  basis[4] = IntVec{1, 1, 1, 1};
  std::vector<BigInt> c(5);
  for (int i = 0; i < 5; ++i) {
    c[static_cast<std::size_t>(i)] = 0;
    for (int t = 0; t < 4; ++t)
      c[static_cast<std::size_t>(i)] += BigInt(plane[static_cast<std::size_t>(t)]) *
                                        basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
  }
  DesarguesRealization out;
  out.points.n = 3;
  std::map<std::pair<int, int>, int> duad_index;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      // intersection of span(e_i, e_j) with the plane: c_j e_i - c_i e_j
      IntVec p(4, 0);
      for (int t = 0; t < 4; ++t)
        p[static_cast<std::size_t>(t)] =
            c[static_cast<std::size_t>(j - 1)] * basis[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(t)] -
            c[static_cast<std::size_t>(i - 1)] * basis[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(t)];
      duad_index[{i, j}] = static_cast<int>(out.points.points.size());
      out.points.add(std::move(p));
    }
  // the cut line of span(e_i,e_j,e_k) passes through p_ij, p_ik and p_jk; two
  // of the cut points span it, so collinearity against that pair is the exact
  // incidence test
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j)
      for (int k = j + 1; k <= 5; ++k)
        out.lines.push_back(BlockSpec::span({duad_index[{i, j}], duad_index[{i, k}]}));
  out.extracted = extract_incidence(out.points, out.lines);
  return out;
}

// ---------------------------------------------------------------------------
// Reye and Hesse-Salmon

struct ReyeRealization {
  RationalPointSet points;
  std::vector<BlockSpec> lines;
  IncidenceStructure extracted;  // (12_4, 16_3)
};

/// Octahedral Reye realization: cube vertices, the centre, the three points
/// at infinity, against the 12 edges and 4 diagonals, incidences from exact
/// collinearity tests.
inline ReyeRealization reye() {
  ReyeRealization out;
  out.points.n = 3;
  std::vector<std::array<int, 3>> signs;
  for (int sx : {1, -1})
    for (int sy : {1, -1})
      for (int sz : {1, -1}) signs.push_back({sx, sy, sz});
  std::sort(signs.begin(), signs.end());
  for (const auto& sg : signs)
    out.points.add(IntVec{1, sg[0], sg[1], sg[2]});
  out.points.add(IntVec{1, 0, 0, 0});  // the centre, on the four diagonals
  for (int axis = 0; axis < 3; ++axis) {
    IntVec inf(4, 0);
    inf[static_cast<std::size_t>(axis) + 1] = 1;
    out.points.add(std::move(inf));
  }
  auto vertex_index = [&](const std::array<int, 3>& sg) {
    return static_cast<int>(std::find(signs.begin(), signs.end(), sg) - signs.begin());
  };
  // edges: vertex pairs differing in exactly one sign
  for (std::size_t i = 0; i < signs.size(); ++i)
    for (std::size_t j = i + 1; j < signs.size(); ++j) {
      int diff = 0;
      for (int t = 0; t < 3; ++t)
        if (signs[i][static_cast<std::size_t>(t)] != signs[j][static_cast<std::size_t>(t)]) ++diff;
      if (diff == 1)
        out.lines.push_back(BlockSpec::span({static_cast<int>(i), static_cast<int>(j)}));
    }
  // diagonals: antipodal pairs
  for (const auto& sg : signs) {
    std::array<int, 3> anti = {-sg[0], -sg[1], -sg[2]};
    if (sg < anti) out.lines.push_back(BlockSpec::span({vertex_index(sg), vertex_index(anti)}));
  }
  require(out.lines.size() == 16, "InternalError", "expected 12 edges and 4 diagonals");
  out.extracted = extract_incidence(out.points, out.lines);
  return out;
}

/// The sixteen collinear triples of the twelve contact points A_i, B_j, C_k,
/// as an abstract (12_4,16_3) structure. Points 0..3 are A_1..A_4, then B,
/// then C.
inline IncidenceStructure hesse_salmon() {
  // row i: block {A_i, B_j, C_{tab[i][j]}} for j = 1..4
  static const int tab[4][4] = {
      {1, 4, 2, 3},
      {3, 2, 4, 1},
      {4, 1, 3, 2},
      {2, 3, 1, 4},
  };
  IncidenceStructure s(12, 16);
  int blk = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      s.inc.set(i, blk, true);
      s.inc.set(4 + j, blk, true);
      s.inc.set(8 + (tab[i][j] - 1), blk, true);
      s.block_labels.push_back("A" + std::to_string(i + 1) + "B" + std::to_string(j + 1) + "C" +
                               std::to_string(tab[i][j]));
      ++blk;
    }
  for (int i = 0; i < 4; ++i) s.point_labels.push_back("A" + std::to_string(i + 1));
  for (int i = 0; i < 4; ++i) s.point_labels.push_back("B" + std::to_string(i + 1));
  for (int i = 0; i < 4; ++i) s.point_labels.push_back("C" + std::to_string(i + 1));
  return s;
}

/// The unique v_{v-1} configuration: x is incident to block j iff x != j.
/// The identity index swap is a polarity.
inline IncidenceStructure complete_configuration(int v) {
  require(v >= 2, "InvalidV", "complete configuration needs v >= 2");
  IncidenceStructure s(v, v);
  for (int x = 0; x < v; ++x)
    for (int j = 0; j < v; ++j)
      if (x != j) s.inc.set(x, j, true);
  return s;
}

// ---------------------------------------------------------------------------
// Generic point-hyperplane realization

struct PointHyperplaneRealization {
  RationalPointSet points;      // moment-curve points in P^r
  IntMat hyperplanes;           // one exact coefficient vector per block
  IncidenceStructure extracted;
  bool matches_input = false;
};

/// Places point i at (1, t, t^2, ..., t^r) with t = i+1 on the degree-r
/// moment curve and spans each block's hyperplane by its r points. A
/// hyperplane meets the curve in at most r points, so off-block points are
/// certified non-incident; general position is a theorem here, not a random
/// event.
inline PointHyperplaneRealization generic_point_hyperplane_realization(
    const IncidenceStructure& s, int workers = 1) {
  TacticalReport tac = validate_tactical(s);
  int r = tac.params.r;
  require(r >= 2, "DegreeTooSmall", "blocks need at least two points");
  require(tac.blocks_distinct, "InvalidParams", "blocks must have distinct point sets");
  PointHyperplaneRealization out;
  out.points.n = r;
  for (int i = 0; i < s.v; ++i) {
    IntVec p(static_cast<std::size_t>(r) + 1);
    BigInt t = i + 1, acc = 1;
    for (int e = 0; e <= r; ++e) {
      p[static_cast<std::size_t>(e)] = acc;
      acc *= t;
    }
    out.points.add(std::move(p));
  }
  std::vector<BlockSpec> specs;
  for (int j = 0; j < s.b; ++j) {
    IntMat span;
    for (int x : s.block_points(j)) span.push_back(out.points.points[static_cast<std::size_t>(x)]);
    IntVec coeff = hyperplane_through(span);
    out.hyperplanes.push_back(coeff);
    specs.push_back(BlockSpec::hyperplane(std::move(coeff)));
  }
  out.extracted = extract_incidence(out.points, specs, workers);
  out.matches_input = out.extracted.inc == s.inc;
  return out;
}

}  // namespace geomcfg
