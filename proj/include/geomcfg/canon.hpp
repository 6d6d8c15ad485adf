#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "geomcfg/incidence.hpp"
#include "geomcfg/perm.hpp"

namespace geomcfg {

/// Levi graph with the two-coloring baked in: vertices [0,v) are points
/// (black), [v, v+b) are blocks (white).
struct ColoredGraph {
  int n = 0;
  int color_break = 0;  // first block vertex
  std::size_t words = 0;
  std::vector<std::uint64_t> adj;  // n x words bitset rows

  bool adjacent(int x, int y) const {
    return (adj[static_cast<std::size_t>(x) * words + static_cast<std::size_t>(y) / 64] >>
            (y % 64)) &
           1u;
  }
  void add_edge(int x, int y) {
    adj[static_cast<std::size_t>(x) * words + static_cast<std::size_t>(y) / 64] |=
        std::uint64_t(1) << (y % 64);
    adj[static_cast<std::size_t>(y) * words + static_cast<std::size_t>(x) / 64] |=
        std::uint64_t(1) << (x % 64);
  }
};

inline ColoredGraph levi_colored(const IncidenceStructure& s) {
  ColoredGraph g;
  g.n = s.v + s.b;
  g.color_break = s.v;
  g.words = static_cast<std::size_t>((g.n + 63) / 64);
  g.adj.assign(static_cast<std::size_t>(g.n) * g.words, 0);
  for (int x = 0; x < s.v; ++x)
    for (int j = 0; j < s.b; ++j)
      if (s.inc.get(x, j)) g.add_edge(x, s.v + j);
  return g;
}

namespace canon_detail {

struct Partition {
  std::vector<int> seq;        // position -> vertex
  std::vector<int> pos;        // vertex -> position
  std::vector<int> cell_start; // position -> start position of its cell
  std::vector<int> cell_len;   // valid at start positions
  int cells = 0;

  bool discrete(int n) const { return cells == n; }
};

inline std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

struct Leaf {
  std::vector<std::uint64_t> trace;
  std::vector<std::uint8_t> enc;
  std::vector<int> labeling;  // vertex -> canonical position
};

// -1: T strictly below the leaf trace; 0: T is a prefix (or equal);
// +1: T strictly above or overruns the leaf trace.
inline int prefix_compare(const std::vector<std::uint64_t>& t,
                          const std::vector<std::uint64_t>& leaf) {
  std::size_t m = std::min(t.size(), leaf.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (t[i] < leaf[i]) return -1;
    if (t[i] > leaf[i]) return 1;
  }
  return t.size() <= leaf.size() ? 0 : 1;
}

inline int leaf_compare(const Leaf& a, const Leaf& b) {
  if (a.trace != b.trace) return a.trace < b.trace ? -1 : 1;
  if (a.enc != b.enc) return a.enc < b.enc ? -1 : 1;
  return 0;
}

/// Partition-refinement search tree with targeted individualization,
/// orbit pruning by the automorphisms discovered at leaves, and a
/// two-anchor (first leaf / best leaf) pruning discipline. The canonical
/// certificate is the minimal (trace, adjacency encoding) over all leaves.
class Search {
public:
  explicit Search(const ColoredGraph& g) : g_(g) {}

  void run() {
    Partition p = initial_partition();
    std::vector<std::uint64_t> trace;
    std::deque<std::vector<int>> work;
    for (int start = 0; start < g_.n;) {
      std::vector<int> cell(p.seq.begin() + start, p.seq.begin() + start + p.cell_len[static_cast<std::size_t>(start)]);
      work.push_back(std::move(cell));
      start += p.cell_len[static_cast<std::size_t>(start)];
    }
    refine(p, work, trace);
    dfs(p, trace);
  }

  const Leaf& best() const { return best_; }
  const std::vector<Perm>& automorphisms() const { return autos_; }

private:
  Partition initial_partition() {
    Partition p;
    p.seq.resize(static_cast<std::size_t>(g_.n));
    p.pos.resize(static_cast<std::size_t>(g_.n));
    p.cell_start.assign(static_cast<std::size_t>(g_.n), 0);
    p.cell_len.assign(static_cast<std::size_t>(g_.n), 0);
    for (int i = 0; i < g_.n; ++i) {
      p.seq[static_cast<std::size_t>(i)] = i;
      p.pos[static_cast<std::size_t>(i)] = i;
    }
    int v = g_.color_break;
    for (int i = 0; i < g_.n; ++i) p.cell_start[static_cast<std::size_t>(i)] = i < v ? 0 : v;
    p.cell_len[0] = v;
    p.cells = 1;
    if (v < g_.n) {
      p.cell_len[static_cast<std::size_t>(v)] = g_.n - v;
      p.cells = 2;
    }
    return p;
  }

  void refine(Partition& p, std::deque<std::vector<int>>& work,
              std::vector<std::uint64_t>& trace) {
    std::vector<std::uint64_t> splitter_bits(g_.words);
    std::vector<int> counts(static_cast<std::size_t>(g_.n));
    while (!work.empty()) {
      std::vector<int> splitter = std::move(work.front());
      work.pop_front();
      std::fill(splitter_bits.begin(), splitter_bits.end(), 0);
      for (int u : splitter)
        splitter_bits[static_cast<std::size_t>(u) / 64] |= std::uint64_t(1) << (u % 64);
      for (int start = 0; start < g_.n;) {
        int len = p.cell_len[static_cast<std::size_t>(start)];
        if (len == 1) {
          ++start;
          continue;
        }
        int lo = -1, hi = -1;
        for (int i = start; i < start + len; ++i) {
          int u = p.seq[static_cast<std::size_t>(i)];
          int c = 0;
          const std::uint64_t* row = &g_.adj[static_cast<std::size_t>(u) * g_.words];
          for (std::size_t w = 0; w < g_.words; ++w) c += popcount64(row[w] & splitter_bits[w]);
          counts[static_cast<std::size_t>(u)] = c;
          if (lo < 0 || c < lo) lo = c;
          if (c > hi) hi = c;
        }
        if (lo == hi) {
          start += len;
          continue;
        }
        std::stable_sort(p.seq.begin() + start, p.seq.begin() + start + len,
                         [&](int a, int b) { return counts[static_cast<std::size_t>(a)] < counts[static_cast<std::size_t>(b)]; });
        std::uint64_t h = mix(mix(0, static_cast<std::uint64_t>(start)), static_cast<std::uint64_t>(len));
        int frag_begin = start;
        for (int i = start; i < start + len; ++i) {
          p.pos[static_cast<std::size_t>(p.seq[static_cast<std::size_t>(i)])] = i;
          bool last = i + 1 == start + len;
          if (last || counts[static_cast<std::size_t>(p.seq[static_cast<std::size_t>(i + (last ? 0 : 1))])] !=
                          counts[static_cast<std::size_t>(p.seq[static_cast<std::size_t>(i)])]) {
            int frag_len = i - frag_begin + 1;
            for (int j = frag_begin; j <= i; ++j) p.cell_start[static_cast<std::size_t>(j)] = frag_begin;
            p.cell_len[static_cast<std::size_t>(frag_begin)] = frag_len;
            h = mix(mix(h, static_cast<std::uint64_t>(frag_len)),
                    static_cast<std::uint64_t>(counts[static_cast<std::size_t>(p.seq[static_cast<std::size_t>(i)])]));
            work.emplace_back(p.seq.begin() + frag_begin, p.seq.begin() + i + 1);
            frag_begin = i + 1;
          }
        }
        // one cell became several
        int frags = 0;
        for (int i = start; i < start + len; i += p.cell_len[static_cast<std::size_t>(i)]) ++frags;
        p.cells += frags - 1;
        trace.push_back(h);
        start += len;
      }
    }
  }

  void individualize(Partition& p, int u, std::deque<std::vector<int>>& work,
                     std::vector<std::uint64_t>& trace) {
    int start = p.cell_start[static_cast<std::size_t>(p.pos[static_cast<std::size_t>(u)])];
    int len = p.cell_len[static_cast<std::size_t>(start)];
    int at = p.pos[static_cast<std::size_t>(u)];
    std::swap(p.seq[static_cast<std::size_t>(start)], p.seq[static_cast<std::size_t>(at)]);
    p.pos[static_cast<std::size_t>(p.seq[static_cast<std::size_t>(at)])] = at;
    p.pos[static_cast<std::size_t>(u)] = start;
    p.cell_len[static_cast<std::size_t>(start)] = 1;
    p.cell_start[static_cast<std::size_t>(start)] = start;
    if (len > 1) {
      p.cell_len[static_cast<std::size_t>(start) + 1] = len - 1;
      for (int i = start + 1; i < start + len; ++i) p.cell_start[static_cast<std::size_t>(i)] = start + 1;
      work.push_back({u});
      work.emplace_back(p.seq.begin() + start + 1, p.seq.begin() + start + len);
      p.cells += 1;
    }
    trace.push_back(mix(mix(0x517cc1b727220a95ull, static_cast<std::uint64_t>(start)),
                        static_cast<std::uint64_t>(len)));
  }

  std::vector<std::uint8_t> encode(const Partition& p) const {
    int v = g_.color_break, b = g_.n - v;
    std::vector<std::uint8_t> enc;
    enc.reserve(8 + static_cast<std::size_t>(v) * ((static_cast<std::size_t>(b) + 7) / 8));
    for (int sh = 0; sh < 4; ++sh) enc.push_back(static_cast<std::uint8_t>((v >> (8 * sh)) & 0xff));
    for (int sh = 0; sh < 4; ++sh) enc.push_back(static_cast<std::uint8_t>((b >> (8 * sh)) & 0xff));
    for (int pi = 0; pi < v; ++pi) {
      int x = p.seq[static_cast<std::size_t>(pi)];
      std::uint8_t cur = 0;
      int nb = 0;
      for (int bj = 0; bj < b; ++bj) {
        int y = p.seq[static_cast<std::size_t>(v + bj)];
        if (g_.adjacent(x, y)) cur |= static_cast<std::uint8_t>(1u << nb);
        if (++nb == 8) {
          enc.push_back(cur);
          cur = 0;
          nb = 0;
        }
      }
      if (nb) enc.push_back(cur);
    }
    return enc;
  }

  void record_automorphism(const std::vector<int>& lab_a, const std::vector<int>& lab_b) {
    // two labelings with equal encodings: sigma = lab_a^{-1} o lab_b
    Perm inv_a(static_cast<std::size_t>(g_.n));
    for (int x = 0; x < g_.n; ++x) inv_a[static_cast<std::size_t>(lab_a[static_cast<std::size_t>(x)])] = x;
    Perm sigma(static_cast<std::size_t>(g_.n));
    for (int x = 0; x < g_.n; ++x) sigma[static_cast<std::size_t>(x)] = inv_a[static_cast<std::size_t>(lab_b[static_cast<std::size_t>(x)])];
    if (!perm_is_identity(sigma)) autos_.push_back(std::move(sigma));
  }

  void process_leaf(const Partition& p, const std::vector<std::uint64_t>& trace) {
    Leaf leaf;
    leaf.trace = trace;
    leaf.enc = encode(p);
    leaf.labeling.assign(static_cast<std::size_t>(g_.n), 0);
    for (int i = 0; i < g_.n; ++i) leaf.labeling[static_cast<std::size_t>(p.seq[static_cast<std::size_t>(i)])] = i;
    if (!have_first_) {
      first_ = leaf;
      best_ = std::move(leaf);
      have_first_ = true;
      return;
    }
    if (leaf.trace == first_.trace && leaf.enc == first_.enc)
      record_automorphism(first_.labeling, leaf.labeling);
    int cmp = leaf_compare(leaf, best_);
    if (cmp < 0)
      best_ = std::move(leaf);
    else if (cmp == 0 && !(leaf.labeling == best_.labeling))
      record_automorphism(best_.labeling, leaf.labeling);
  }

  void dfs(const Partition& p, const std::vector<std::uint64_t>& trace) {
    if (p.discrete(g_.n)) {
      process_leaf(p, trace);
      return;
    }
    int target = 0;
    while (p.cell_len[static_cast<std::size_t>(target)] == 1) ++target;
    std::vector<int> candidates(p.seq.begin() + target,
                                p.seq.begin() + target + p.cell_len[static_cast<std::size_t>(target)]);
    std::vector<int> explored;
    for (int u : candidates) {
      if (orbit_pruned(u, explored)) continue;
      Partition child = p;
      std::vector<std::uint64_t> child_trace = trace;
      std::deque<std::vector<int>> work;
      individualize(child, u, work, child_trace);
      refine(child, work, child_trace);
      if (have_first_) {
        int vs_first = prefix_compare(child_trace, first_.trace);
        int vs_best = prefix_compare(child_trace, best_.trace);
        if (vs_first != 0 && vs_best > 0) {
          explored.push_back(u);
          continue;
        }
      }
      prefix_.push_back(u);
      dfs(child, child_trace);
      prefix_.pop_back();
      explored.push_back(u);
    }
  }

  bool orbit_pruned(int u, const std::vector<int>& explored) {
    if (explored.empty() || autos_.empty()) return false;
    // orbits under the subgroup of discovered automorphisms fixing the
    // current prefix pointwise
    std::vector<int> parent(static_cast<std::size_t>(g_.n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    for (const Perm& g : autos_) {
      bool fixes = true;
      for (int w : prefix_)
        if (g[static_cast<std::size_t>(w)] != w) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int x = 0; x < g_.n; ++x) {
        int rx = find(x), ry = find(g[static_cast<std::size_t>(x)]);
        if (rx != ry) parent[static_cast<std::size_t>(std::max(rx, ry))] = std::min(rx, ry);
      }
    }
    int ru = find(u);
    for (int w : explored)
      if (find(w) == ru) return true;
    return false;
  }

  const ColoredGraph& g_;
  std::vector<Perm> autos_;
  std::vector<int> prefix_;
  Leaf first_, best_;
  bool have_first_ = false;
};

}  // namespace canon_detail

struct CanonicalForm {
  std::vector<std::uint8_t> certificate;
  std::vector<int> vertex_labeling;  // Levi vertex -> canonical position
  std::vector<Perm> proper_generators;
};

/// Certificate invariant under every point/block relabeling. Switch
/// relabelings are deliberately not folded in; duality isomorphism is
/// detected by comparing against the dual's certificate.
inline CanonicalForm canonical_form(const IncidenceStructure& s) {
  ColoredGraph g = levi_colored(s);
  canon_detail::Search search(g);
  search.run();
  CanonicalForm out;
  out.certificate = search.best().enc;
  out.vertex_labeling = search.best().labeling;
  out.proper_generators = search.automorphisms();
  return out;
}

inline std::vector<std::uint8_t> certificate(const IncidenceStructure& s) {
  return canonical_form(s).certificate;
}

inline bool is_isomorphic(const IncidenceStructure& a, const IncidenceStructure& b) {
  if (a.v != b.v || a.b != b.b) return false;
  return certificate(a) == certificate(b);
}

struct IsoWitness {
  std::vector<int> point_map;  // a-point -> b-point
  std::vector<int> block_map;  // a-block -> b-block
};

/// Explicit isomorphism recovered from the two canonical labelings; the
/// caller (and the test suite) verifies it edge by edge.
inline std::optional<IsoWitness> isomorphism_witness(const IncidenceStructure& a,
                                                     const IncidenceStructure& b) {
  if (a.v != b.v || a.b != b.b) return std::nullopt;
  CanonicalForm ca = canonical_form(a);
  CanonicalForm cb = canonical_form(b);
  if (ca.certificate != cb.certificate) return std::nullopt;
  std::vector<int> inv_b(static_cast<std::size_t>(b.v + b.b));
  for (int x = 0; x < b.v + b.b; ++x)
    inv_b[static_cast<std::size_t>(cb.vertex_labeling[static_cast<std::size_t>(x)])] = x;
  IsoWitness w;
  w.point_map.resize(static_cast<std::size_t>(a.v));
  w.block_map.resize(static_cast<std::size_t>(a.b));
  for (int x = 0; x < a.v; ++x)
    w.point_map[static_cast<std::size_t>(x)] = inv_b[static_cast<std::size_t>(ca.vertex_labeling[static_cast<std::size_t>(x)])];
  for (int j = 0; j < a.b; ++j)
    w.block_map[static_cast<std::size_t>(j)] =
        inv_b[static_cast<std::size_t>(ca.vertex_labeling[static_cast<std::size_t>(a.v + j)])] - b.v;
  return w;
}

/// Searches for an involution exchanging points and blocks: assignments come
/// in forced pairs (p -> B, B -> p), with the pairwise consistency condition
/// inc(p, C) == inc(q, B) for assigned pairs (p,B), (q,C).
inline std::optional<Perm> find_polarity(const IncidenceStructure& s) {
  if (s.v != s.b) return std::nullopt;
  int v = s.v;
  std::vector<int> point_to_block(static_cast<std::size_t>(v), -1);
  std::vector<int> block_to_point(static_cast<std::size_t>(v), -1);
  std::function<bool(int)> rec = [&](int p) -> bool {
    if (p == v) return true;
    for (int cand = 0; cand < v; ++cand) {
      if (block_to_point[static_cast<std::size_t>(cand)] >= 0) continue;
      bool ok = true;
      for (int q = 0; q < p && ok; ++q) {
        int c = point_to_block[static_cast<std::size_t>(q)];
        if (s.inc.get(p, c) != s.inc.get(q, cand)) ok = false;
      }
      if (!ok) continue;
      point_to_block[static_cast<std::size_t>(p)] = cand;
      block_to_point[static_cast<std::size_t>(cand)] = p;
      if (rec(p + 1)) return true;
      point_to_block[static_cast<std::size_t>(p)] = -1;
      block_to_point[static_cast<std::size_t>(cand)] = -1;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  Perm sigma(static_cast<std::size_t>(2 * v));
  for (int p = 0; p < v; ++p) {
    sigma[static_cast<std::size_t>(p)] = v + point_to_block[static_cast<std::size_t>(p)];
    sigma[static_cast<std::size_t>(v + point_to_block[static_cast<std::size_t>(p)])] = p;
  }
  return sigma;
}

struct AutomorphismGroup {
  PermGroup proper;          // color-preserving, degree v+b
  BigInt proper_order = 0;
  BigInt full_order = 0;     // includes the switch coset when one exists
  bool has_switch = false;
  bool has_polarity = false;
  std::optional<Perm> switch_perm;   // one color-swapping automorphism
  std::optional<Perm> polarity;      // an involutive switch, when found
};

/// Proper group by refinement search; switch detection by comparing the
/// certificate with the dual's. The full group has the proper group at index
/// at most two, so the full order follows from the switch flag.
inline AutomorphismGroup automorphism_group(const IncidenceStructure& s, bool allow_switch) {
  CanonicalForm cf = canonical_form(s);
  AutomorphismGroup out{PermGroup(s.v + s.b)};
  // the search may return a very redundant list; keep the chain's strong
  // generators so downstream orbit computations stay cheap
  PermGroup raw(s.v + s.b, cf.proper_generators);
  out.proper_order = raw.order();
  for (const Perm& g : raw.strong_generators()) out.proper.add_generator(g);
  out.full_order = out.proper_order;
  if (allow_switch && s.v == s.b) {
    IncidenceStructure d = dual(s);
    CanonicalForm cd = canonical_form(d);
    if (cd.certificate == cf.certificate) {
      out.has_switch = true;
      out.full_order = out.proper_order * 2;
      // explicit switch from the two canonical labelings
      std::vector<int> inv_d(static_cast<std::size_t>(s.v + s.b));
      for (int x = 0; x < s.v + s.b; ++x)
        inv_d[static_cast<std::size_t>(cd.vertex_labeling[static_cast<std::size_t>(x)])] = x;
      Perm sigma(static_cast<std::size_t>(s.v + s.b));
      for (int x = 0; x < s.v + s.b; ++x) {
        int w = inv_d[static_cast<std::size_t>(cf.vertex_labeling[static_cast<std::size_t>(x)])];
        sigma[static_cast<std::size_t>(x)] = w < s.b ? s.v + w : w - s.b;
      }
      out.switch_perm = sigma;
      out.polarity = find_polarity(s);
      out.has_polarity = out.polarity.has_value();
    }
  }
  return out;
}

/// True iff the proper group is transitive on points and on blocks.
inline bool is_regular_configuration(const IncidenceStructure& s) {
  CanonicalForm cf = canonical_form(s);
  PermGroup g(s.v + s.b, cf.proper_generators);
  return g.is_transitive_on(0, s.v) && g.is_transitive_on(s.v, s.v + s.b);
}

}  // namespace geomcfg
