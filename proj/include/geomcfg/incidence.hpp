#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "geomcfg/bitmat.hpp"
#include "geomcfg/common.hpp"

namespace geomcfg {

/// Bipartite incidence relation between v points and b blocks.
///
/// Points and blocks are index-addressed; labels are provenance metadata and
/// never participate in equality. Instances are immutable after construction
/// and safe to share across threads.
struct IncidenceStructure {
  int v = 0;
  int b = 0;
  BitMatrix inc;  // v x b, (x,B) true iff point x lies in block B
  std::vector<std::string> point_labels;  // optional, empty or size v
  std::vector<std::string> block_labels;  // optional, empty or size b

  IncidenceStructure() = default;
  IncidenceStructure(int v_, int b_) : v(v_), b(b_), inc(v_, b_) {
    require(v_ >= 1 && b_ >= 1, "InvalidDims", "need v >= 1 and b >= 1");
  }

  static IncidenceStructure from_blocks(int v, const std::vector<std::vector<int>>& blocks) {
    IncidenceStructure s(v, static_cast<int>(blocks.size()));
    for (int j = 0; j < s.b; ++j)
      for (int x : blocks[static_cast<std::size_t>(j)]) {
        require(x >= 0 && x < v, "IndexOutOfRange", "point index out of range in block");
        s.inc.set(x, j, true);
      }
    return s;
  }

  bool incident(int x, int j) const { return inc.get(x, j); }

  std::vector<int> block_points(int j) const {
    std::vector<int> out;
    for (int x = 0; x < v; ++x)
      if (inc.get(x, j)) out.push_back(x);
    return out;
  }
  std::vector<int> point_blocks(int x) const { return inc.row_indices(x); }

  std::vector<std::vector<int>> blocks_as_lists() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(b));
    for (int j = 0; j < b; ++j) out[static_cast<std::size_t>(j)] = block_points(j);
    return out;
  }

  /// Structural equality; labels are ignored by design.
  friend bool operator==(const IncidenceStructure& a, const IncidenceStructure& b_) {
    return a.v == b_.v && a.b == b_.b && a.inc == b_.inc;
  }
};

struct ConfigParams {
  int v = 0, k = 0, b = 0, r = 0;
  std::optional<int> lambda;

  friend bool operator==(const ConfigParams& a, const ConfigParams& b) {
    return a.v == b.v && a.k == b.k && a.b == b.b && a.r == b.r && a.lambda == b.lambda;
  }
};

struct TacticalReport {
  ConfigParams params;
  bool points_distinct = true;  // no two points with identical block sets
  bool blocks_distinct = true;  // no two blocks with identical point sets
};

/// Checks constant row and column sums and reports the distinctness invariant.
/// Distinctness violations are reported, not raised: deletion intermediates
/// may legitimately repeat rows.
inline TacticalReport validate_tactical(const IncidenceStructure& s) {
  TacticalReport rep;
  int k = s.inc.row_popcount(0);
  for (int x = 1; x < s.v; ++x)
    if (s.inc.row_popcount(x) != k)
      fail("NotTactical", "point " + std::to_string(x) + " has degree " +
                              std::to_string(s.inc.row_popcount(x)) + ", expected " +
                              std::to_string(k));
  BitMatrix t = s.inc.transposed();
  int r = t.row_popcount(0);
  for (int j = 1; j < s.b; ++j)
    if (t.row_popcount(j) != r)
      fail("NotTactical", "block " + std::to_string(j) + " has size " +
                              std::to_string(t.row_popcount(j)) + ", expected " +
                              std::to_string(r));
  for (int x = 0; x < s.v && rep.points_distinct; ++x)
    for (int y = x + 1; y < s.v; ++y)
      if (s.inc.rows_equal(x, y)) {
        rep.points_distinct = false;
        break;
      }
  for (int i = 0; i < s.b && rep.blocks_distinct; ++i)
    for (int j = i + 1; j < s.b; ++j)
      if (t.rows_equal(i, j)) {
        rep.blocks_distinct = false;
        break;
      }
  rep.params = {s.v, k, s.b, r, std::nullopt};
  return rep;
}

inline IncidenceStructure dual(const IncidenceStructure& s) {
  IncidenceStructure d(s.b, s.v);
  d.inc = s.inc.transposed();
  d.point_labels = s.block_labels;
  d.block_labels = s.point_labels;
  return d;
}

/// Complement of a symmetric v_k configuration: blockwise complements,
/// yielding a v_{v-k} structure.
inline IncidenceStructure complement_of(const IncidenceStructure& s) {
  TacticalReport rep = validate_tactical(s);
  require(rep.params.v == rep.params.b && rep.params.k == rep.params.r, "NotSymmetric",
          "complement requires a symmetric v_k configuration");
  IncidenceStructure c(s.v, s.b);
  c.inc = s.inc.negated();
  c.point_labels = s.point_labels;
  c.block_labels = s.block_labels;
  return c;
}

/// Block-diagonal sum. Both inputs must be tactical with matching (k,r) so
/// the result is tactical again.
inline IncidenceStructure direct_sum(const IncidenceStructure& s1, const IncidenceStructure& s2) {
  TacticalReport r1 = validate_tactical(s1);
  TacticalReport r2 = validate_tactical(s2);
  require(r1.params.k == r2.params.k && r1.params.r == r2.params.r, "IncompatibleParams",
          "direct sum requires equal point degrees and equal block sizes");
  IncidenceStructure out(s1.v + s2.v, s1.b + s2.b);
  for (int x = 0; x < s1.v; ++x)
    for (int j = 0; j < s1.b; ++j)
      if (s1.inc.get(x, j)) out.inc.set(x, j, true);
  for (int x = 0; x < s2.v; ++x)
    for (int j = 0; j < s2.b; ++j)
      if (s2.inc.get(x, j)) out.inc.set(s1.v + x, s1.b + j, true);
  return out;
}

/// Connectivity of the bipartite incidence graph.
inline bool is_connected(const IncidenceStructure& s) {
  int n = s.v + s.b;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    if (u < s.v) {
      for (int j = 0; j < s.b; ++j)
        if (s.inc.get(u, j) && !seen[static_cast<std::size_t>(s.v + j)]) {
          seen[static_cast<std::size_t>(s.v + j)] = 1;
          ++reached;
          stack.push_back(s.v + j);
        }
    } else {
      int j = u - s.v;
      for (int x = 0; x < s.v; ++x)
        if (s.inc.get(x, j) && !seen[static_cast<std::size_t>(x)]) {
          seen[static_cast<std::size_t>(x)] = 1;
          ++reached;
          stack.push_back(x);
        }
    }
  }
  return reached == n;
}

struct SClasses {
  std::vector<int> class_of;       // point -> class id (0-based, by least member)
  std::vector<int> sizes;          // ascending class-size multiset
  std::vector<std::vector<int>> classes;
};

/// Transitive closure of "the two points share no block". The ascending
/// class-size multiset is an isomorphism invariant.
inline SClasses s_equivalence_classes(const IncidenceStructure& s) {
  std::vector<int> parent(static_cast<std::size_t>(s.v));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (int x = 0; x < s.v; ++x)
    for (int y = x + 1; y < s.v; ++y)
      if (s.inc.row_and_popcount(x, y) == 0) {
        int rx = find(x), ry = find(y);
        if (rx != ry) parent[static_cast<std::size_t>(std::max(rx, ry))] = std::min(rx, ry);
      }
  SClasses out;
  out.class_of.assign(static_cast<std::size_t>(s.v), -1);
  std::map<int, int> root_to_id;
  for (int x = 0; x < s.v; ++x) {
    int r = find(x);
    auto it = root_to_id.find(r);
    if (it == root_to_id.end()) {
      it = root_to_id.emplace(r, static_cast<int>(out.classes.size())).first;
      out.classes.emplace_back();
    }
    out.class_of[static_cast<std::size_t>(x)] = it->second;
    out.classes[static_cast<std::size_t>(it->second)].push_back(x);
  }
  for (const auto& c : out.classes) out.sizes.push_back(static_cast<int>(c.size()));
  std::sort(out.sizes.begin(), out.sizes.end());
  return out;
}

/// Removes point x together with every block incident to it.
inline IncidenceStructure delete_point(const IncidenceStructure& s, int x) {
  require(x >= 0 && x < s.v, "IndexOutOfRange", "delete_point: no such point");
  std::vector<int> keep_blocks;
  for (int j = 0; j < s.b; ++j)
    if (!s.inc.get(x, j)) keep_blocks.push_back(j);
  require(s.v > 1 && !keep_blocks.empty(), "InvalidDims", "deletion would empty the structure");
  IncidenceStructure out(s.v - 1, static_cast<int>(keep_blocks.size()));
  for (int p = 0, np = 0; p < s.v; ++p) {
    if (p == x) continue;
    for (int nj = 0; nj < out.b; ++nj)
      if (s.inc.get(p, keep_blocks[static_cast<std::size_t>(nj)])) out.inc.set(np, nj, true);
    ++np;
  }
  if (!s.point_labels.empty()) {
    for (int p = 0; p < s.v; ++p)
      if (p != x) out.point_labels.push_back(s.point_labels[static_cast<std::size_t>(p)]);
  }
  if (!s.block_labels.empty()) {
    for (int j : keep_blocks) out.block_labels.push_back(s.block_labels[static_cast<std::size_t>(j)]);
  }
  return out;
}

/// True iff every pair of distinct points shares at most one block.
inline bool is_lineal(const IncidenceStructure& s) {
  for (int x = 0; x < s.v; ++x)
    for (int y = x + 1; y < s.v; ++y)
      if (s.inc.row_and_popcount(x, y) > 1) return false;
  return true;
}

}  // namespace geomcfg
