#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "geomcfg/common.hpp"

namespace geomcfg {

using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

/// compose(a,b)[x] = b[a[x]]  (apply a first, then b)
inline Perm perm_compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[static_cast<std::size_t>(a[i])];
  return c;
}

inline Perm perm_inverse(const Perm& a) {
  Perm inv(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) inv[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
  return inv;
}

inline bool perm_is_identity(const Perm& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != static_cast<int>(i)) return false;
  return true;
}

inline std::vector<std::vector<int>> orbits_of(const std::vector<Perm>& gens, int n) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const Perm& g : gens)
    for (int x = 0; x < n; ++x) {
      int rx = find(x), ry = find(g[static_cast<std::size_t>(x)]);
      if (rx != ry) parent[static_cast<std::size_t>(std::max(rx, ry))] = std::min(rx, ry);
    }
  std::vector<std::vector<int>> orbs;
  std::vector<int> orb_id(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    int r = find(x);
    if (orb_id[static_cast<std::size_t>(r)] < 0) {
      orb_id[static_cast<std::size_t>(r)] = static_cast<int>(orbs.size());
      orbs.emplace_back();
    }
    orbs[static_cast<std::size_t>(orb_id[static_cast<std::size_t>(r)])].push_back(x);
  }
  return orbs;
}

/// Permutation group behind a deterministically built stabilizer chain
/// (Schreier generators sifted in fixed order, no randomization), so orders
/// and logs are reproducible run to run.
class PermGroup {
public:
  explicit PermGroup(int degree) : degree_(degree) {}
  PermGroup(int degree, const std::vector<Perm>& gens) : degree_(degree) {
    for (const Perm& g : gens) add_generator(g);
  }

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  void add_generator(const Perm& g) {
    require(static_cast<int>(g.size()) == degree_, "InvalidParams", "generator degree mismatch");
    if (perm_is_identity(g)) return;
    gens_.push_back(g);
    chain_built_ = false;
  }

  BigInt order() {
    build_chain();
    BigInt o = 1;
    for (const Level& lv : levels_) o *= static_cast<long long>(lv.orbit.size());
    return o;
  }

  bool contains(const Perm& g) {
    build_chain();
    Perm residue;
    return sift(g, 0, residue) < 0;
  }

  /// The generators actually placed in the chain: a small set generating the
  /// same group, useful when the input list is large and redundant.
  std::vector<Perm> strong_generators() {
    build_chain();
    std::vector<Perm> out;
    for (const Level& lv : levels_)
      for (const Perm& g : lv.gens) out.push_back(g);
    return out;
  }

  std::vector<std::vector<int>> orbits() const { return orbits_of(gens_, degree_); }

  bool is_transitive_on(int lo, int hi) const {
    for (const auto& o : orbits()) {
      if (std::find(o.begin(), o.end(), lo) != o.end()) {
        int count = 0;
        for (int x : o)
          if (x >= lo && x < hi) ++count;
        return count == hi - lo;
      }
    }
    return false;
  }

  /// Transitivity on ordered pairs of distinct elements of [lo,hi).
  bool is_2transitive_on(int lo, int hi) const {
    long long m = hi - lo;
    if (m < 2) return false;
    std::vector<char> seen(static_cast<std::size_t>(m * m), 0);
    std::vector<std::pair<int, int>> queue{{lo, lo + 1}};
    seen[1] = 1;
    std::size_t head = 0;
    long long found = 1;
    while (head < queue.size()) {
      auto [a, b] = queue[head++];
      for (const Perm& g : gens_) {
        int na = g[static_cast<std::size_t>(a)], nb = g[static_cast<std::size_t>(b)];
        if (na < lo || na >= hi || nb < lo || nb >= hi) return false;
        std::size_t key = static_cast<std::size_t>(na - lo) * static_cast<std::size_t>(m) +
                          static_cast<std::size_t>(nb - lo);
        if (!seen[key]) {
          seen[key] = 1;
          ++found;
          queue.emplace_back(na, nb);
        }
      }
    }
    return found == m * (m - 1);
  }

private:
  struct Level {
    int base = -1;
    std::vector<Perm> gens;         // generators assigned at this depth
    std::vector<int> orbit;         // discovery order
    std::vector<int> where;         // point -> orbit position or -1
    std::vector<Perm> transversal;  // u with u[base] = orbit point
  };

  void rebuild_orbit(std::size_t li) {
    Level& lv = levels_[li];
    lv.orbit.assign(1, lv.base);
    lv.where.assign(static_cast<std::size_t>(degree_), -1);
    lv.where[static_cast<std::size_t>(lv.base)] = 0;
    lv.transversal.assign(1, perm_identity(degree_));
    std::vector<const Perm*> eff = effective_gens(li);
    for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
      int p = lv.orbit[head];
      for (const Perm* g : eff) {
        int q = (*g)[static_cast<std::size_t>(p)];
        if (lv.where[static_cast<std::size_t>(q)] < 0) {
          lv.where[static_cast<std::size_t>(q)] = static_cast<int>(lv.orbit.size());
          lv.orbit.push_back(q);
          lv.transversal.push_back(perm_compose(lv.transversal[head], *g));
        }
      }
    }
  }

  // level-i group = stabilizer of the first i base points; its generators are
  // all the ones assigned at depth >= i
  std::vector<const Perm*> effective_gens(std::size_t li) const {
    std::vector<const Perm*> eff;
    for (std::size_t j = li; j < levels_.size(); ++j)
      for (const Perm& g : levels_[j].gens) eff.push_back(&g);
    return eff;
  }

  // Returns -1 when g sifts to the identity, otherwise the deepest level
  // reached (residue is set).
  int sift(const Perm& g, std::size_t from, Perm& residue) {
    Perm cur = g;
    for (std::size_t i = from; i < levels_.size(); ++i) {
      if (perm_is_identity(cur)) return -1;
      Level& lv = levels_[i];
      int img = cur[static_cast<std::size_t>(lv.base)];
      int pos = lv.where[static_cast<std::size_t>(img)];
      if (pos < 0) {
        residue = cur;
        return static_cast<int>(i);
      }
      cur = perm_compose(cur, perm_inverse(lv.transversal[static_cast<std::size_t>(pos)]));
    }
    if (perm_is_identity(cur)) return -1;
    residue = cur;
    return static_cast<int>(levels_.size());
  }

  void place(const Perm& g, std::size_t level) {
    if (level == levels_.size()) {
      Level lv;
      for (int x = 0; x < degree_; ++x)
        if (g[static_cast<std::size_t>(x)] != x) {
          lv.base = x;
          break;
        }
      levels_.push_back(std::move(lv));
    }
    levels_[level].gens.push_back(g);
    for (std::size_t j = 0; j < levels_.size(); ++j) rebuild_orbit(j);
  }

  void build_chain() {
    if (chain_built_) return;
    levels_.clear();
    for (const Perm& g : gens_) {
      Perm residue;
      int stuck = sift(g, 0, residue);
      if (stuck >= 0) place(residue, static_cast<std::size_t>(stuck));
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < levels_.size() && !changed; ++i) {
        Level& lv = levels_[i];
        std::vector<const Perm*> eff = effective_gens(i);
        for (std::size_t oi = 0; oi < lv.orbit.size() && !changed; ++oi) {
          for (const Perm* g : eff) {
            int q = (*g)[static_cast<std::size_t>(lv.orbit[oi])];
            Perm schreier = perm_compose(
                perm_compose(lv.transversal[oi], *g),
                perm_inverse(
                    lv.transversal[static_cast<std::size_t>(lv.where[static_cast<std::size_t>(q)])]));
            Perm residue;
            int stuck = sift(schreier, i + 1, residue);
            if (stuck >= 0) {
              place(residue, static_cast<std::size_t>(stuck));
              changed = true;
              break;
            }
          }
        }
      }
    }
    chain_built_ = true;
  }

  int degree_;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
  bool chain_built_ = false;
};

}  // namespace geomcfg
