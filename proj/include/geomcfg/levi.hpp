#pragma once

#include <cstdint>
#include <deque>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "geomcfg/canon.hpp"
#include "geomcfg/incidence.hpp"

namespace geomcfg {

/// Two-colored Levi graph: vertex i < v is point i (black), vertex v+j is
/// block j (white); adjacency lists sorted.
struct LeviGraph {
  int n = 0;
  int v = 0;  // black vertex count
  std::vector<std::vector<int>> adj;
};

inline LeviGraph levi_graph(const IncidenceStructure& s) {
  LeviGraph g;
  g.n = s.v + s.b;
  g.v = s.v;
  g.adj.assign(static_cast<std::size_t>(g.n), {});
  for (int x = 0; x < s.v; ++x)
    for (int j = 0; j < s.b; ++j)
      if (s.inc.get(x, j)) {
        g.adj[static_cast<std::size_t>(x)].push_back(s.v + j);
        g.adj[static_cast<std::size_t>(s.v + j)].push_back(x);
      }
  return g;
}

inline long long levi_edge_count(const LeviGraph& g) {
  long long e = 0;
  for (const auto& a : g.adj) e += static_cast<long long>(a.size());
  return e / 2;
}

/// Shortest cycle length, or 0 for a forest.
inline int girth(const LeviGraph& g) {
  int best = 0;
  for (int start = 0; start < g.n; ++start) {
    std::vector<int> dist(static_cast<std::size_t>(g.n), -1);
    std::vector<int> parent(static_cast<std::size_t>(g.n), -1);
    std::deque<int> queue{start};
    dist[static_cast<std::size_t>(start)] = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : g.adj[static_cast<std::size_t>(u)]) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(w)] = u;
          queue.push_back(w);
        } else if (parent[static_cast<std::size_t>(u)] != w) {
          int cycle = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(w)] + 1;
          if (best == 0 || cycle < best) best = cycle;
        }
      }
    }
  }
  return best;
}

/// Graphviz rendering with the black/white vertex shading convention.
inline std::string to_dot(const IncidenceStructure& s, const std::string& name = "levi") {
  std::ostringstream out;
  out << "graph " << name << " {\n  node [style=filled];\n";
  for (int x = 0; x < s.v; ++x) {
    std::string label = !s.point_labels.empty() ? s.point_labels[static_cast<std::size_t>(x)]
                                                : "p" + std::to_string(x);
    out << "  p" << x << " [fillcolor=black, fontcolor=white, label=\"" << label << "\"];\n";
  }
  for (int j = 0; j < s.b; ++j) {
    std::string label = !s.block_labels.empty() ? s.block_labels[static_cast<std::size_t>(j)]
                                                : "b" + std::to_string(j);
    out << "  b" << j << " [fillcolor=white, label=\"" << label << "\"];\n";
  }
  for (int x = 0; x < s.v; ++x)
    for (int j = 0; j < s.b; ++j)
      if (s.inc.get(x, j)) out << "  p" << x << " -- b" << j << ";\n";
  out << "}\n";
  return out.str();
}

namespace arc_detail {

struct ArcKey {
  std::uint64_t hi = 0, lo = 0;
  friend bool operator==(const ArcKey& a, const ArcKey& b) { return a.hi == b.hi && a.lo == b.lo; }
};

struct ArcKeyHash {
  std::size_t operator()(const ArcKey& k) const {
    return static_cast<std::size_t>(k.hi * 0x9e3779b97f4a7c15ull ^ k.lo);
  }
};

inline ArcKey encode_arc(const std::vector<int>& arc) {
  // 12 bits per vertex, supports graphs below 4096 vertices and arcs of
  // length at most 9
  ArcKey key;
  for (std::size_t i = 0; i < arc.size(); ++i) {
    std::uint64_t val = static_cast<std::uint64_t>(arc[i] + 1);
    if (i < 5)
      key.lo |= val << (12 * i);
    else
      key.hi |= val << (12 * (i - 5));
  }
  return key;
}

inline ArcKey apply_perm_packed(const ArcKey& key, const Perm& gen, int len) {
  ArcKey out;
  for (int i = 0; i < len; ++i) {
    std::uint64_t val = i < 5 ? (key.lo >> (12 * i)) & 0xfff : (key.hi >> (12 * (i - 5))) & 0xfff;
    std::uint64_t img = static_cast<std::uint64_t>(gen[static_cast<std::size_t>(val - 1)] + 1);
    if (i < 5)
      out.lo |= img << (12 * i);
    else
      out.hi |= img << (12 * (i - 5));
  }
  return out;
}

inline long long count_arcs(const LeviGraph& g, int s) {
  // s-arcs are non-backtracking walks of s edges; counted by the directed
  // edge transfer recurrence
  if (s == 0) return g.n;
  std::vector<std::pair<int, int>> dir_edges;
  for (int u = 0; u < g.n; ++u)
    for (int w : g.adj[static_cast<std::size_t>(u)]) dir_edges.emplace_back(u, w);
  std::vector<long long> count(dir_edges.size(), 1);
  for (int step = 1; step < s; ++step) {
    std::vector<long long> next(dir_edges.size(), 0);
    for (std::size_t e = 0; e < dir_edges.size(); ++e) {
      auto [u, w] = dir_edges[e];
      for (std::size_t f = 0; f < dir_edges.size(); ++f) {
        auto [w2, x] = dir_edges[f];
        if (w2 == w && x != u) next[f] += count[e];
      }
    }
    count = std::move(next);
  }
  long long total = 0;
  for (long long c : count) total += c;
  return total;
}

}  // namespace arc_detail

/// Largest s <= 7 such that the full symmetry group (switches included) is
/// transitive on the s-arcs of the Levi graph, by orbit expansion from a
/// single arc. Returns -1 when the group is not even vertex-transitive.
inline int s_regularity(const IncidenceStructure& s, const std::vector<Perm>& full_gens,
                        long long arc_budget = 10000000) {
  LeviGraph g = levi_graph(s);
  require(is_connected(s), "Undefined", "s-regularity needs a connected Levi graph");
  for (const auto& a : g.adj)
    require(a.size() >= 2, "Undefined", "s-regularity undefined with degree-1 vertices");
  int result = -1;
  for (int t = 0; t <= 7; ++t) {
    long long total = arc_detail::count_arcs(g, t);
    require(total <= arc_budget, "BudgetExceeded", "arc count exceeds budget");
    // seed arc: lexicographically first
    std::vector<int> seed{0};
    for (int step = 0; step < t; ++step) {
      int prev = seed.size() >= 2 ? seed[seed.size() - 2] : -1;
      int next = -1;
      for (int w : g.adj[static_cast<std::size_t>(seed.back())])
        if (w != prev) {
          next = w;
          break;
        }
      if (next < 0) return result;  // no arc of this length exists
      seed.push_back(next);
    }
    std::unordered_set<arc_detail::ArcKey, arc_detail::ArcKeyHash> orbit;
    orbit.reserve(static_cast<std::size_t>(std::min<long long>(total, arc_budget)) * 2);
    std::deque<arc_detail::ArcKey> queue{arc_detail::encode_arc(seed)};
    orbit.insert(queue.front());
    while (!queue.empty()) {
      arc_detail::ArcKey arc = queue.front();
      queue.pop_front();
      for (const Perm& gen : full_gens) {
        arc_detail::ArcKey key = arc_detail::apply_perm_packed(arc, gen, t + 1);
        if (orbit.insert(key).second) queue.push_back(key);
      }
      require(static_cast<long long>(orbit.size()) <= arc_budget, "BudgetExceeded",
              "arc orbit exceeds budget");
    }
    if (static_cast<long long>(orbit.size()) != total) return result;
    result = t;
  }
  return result;
}

}  // namespace geomcfg
