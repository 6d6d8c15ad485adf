#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "geomcfg/incidence.hpp"

namespace geomcfg {

namespace census_detail {

// A block {a<b<c} is coded with c in the top byte so that integer order on
// codes is colex order on triples.
inline int block_code(int a, int b, int c) { return (c << 16) | (b << 8) | a; }
inline std::array<int, 3> block_decode(int code) {
  return {code & 0xff, (code >> 8) & 0xff, code >> 16};
}

/// Minimality test for the orderly generation: the sorted block list is
/// canonical iff no point relabeling produces a colex-smaller list. Labels
/// are assigned one at a time; blocks complete in nondecreasing top-label
/// order, so the image list is compared against the input positionally as an
/// append-only stream.
class MinimalityTest {
public:
  MinimalityTest(int v, const std::vector<int>& blocks) : v_(v), input_(blocks) {
    point_blocks_.assign(static_cast<std::size_t>(v), {});
    for (int code : blocks) {
      auto t = block_decode(code);
      for (int p : t) point_blocks_[static_cast<std::size_t>(p)].push_back(code);
    }
  }

  bool input_is_minimal() {
    new_of_old_.assign(static_cast<std::size_t>(v_), -1);
    old_of_new_.assign(static_cast<std::size_t>(v_), -1);
    found_smaller_ = false;
    dfs(0, 0);
    return !found_smaller_;
  }

private:
  // Returns codes of input blocks that become fully labeled when old point
  // `o` receives new label `lab`, as new-label codes, sorted.
  std::vector<int> completions(int o, int lab) {
    std::vector<int> done;
    for (int code : point_blocks_[static_cast<std::size_t>(o)]) {
      auto t = block_decode(code);
      int img[3];
      bool complete = true;
      for (int i = 0; i < 3; ++i) {
        int p = t[static_cast<std::size_t>(i)];
        int nl = p == o ? lab : new_of_old_[static_cast<std::size_t>(p)];
        if (nl < 0) {
          complete = false;
          break;
        }
        img[i] = nl;
      }
      if (!complete) continue;
      if (img[0] > img[1]) std::swap(img[0], img[1]);
      if (img[1] > img[2]) std::swap(img[1], img[2]);
      if (img[0] > img[1]) std::swap(img[0], img[1]);
      done.push_back(block_code(img[0], img[1], img[2]));
    }
    std::sort(done.begin(), done.end());
    return done;
  }

  void dfs(int lab, int idx) {
    if (found_smaller_) return;
    if (lab == v_) return;  // all equal: the identity-class image matches
    for (int o = 0; o < v_; ++o) {
      if (new_of_old_[static_cast<std::size_t>(o)] >= 0) continue;
      std::vector<int> done = completions(o, lab);
      int my_idx = idx;
      bool prune = false;
      for (int code : done) {
        if (my_idx >= static_cast<int>(input_.size())) {
          prune = true;  // image has more blocks early; cannot be smaller
          break;
        }
        int ref = input_[static_cast<std::size_t>(my_idx)];
        if (code < ref) {
          found_smaller_ = true;
          return;
        }
        if (code > ref) {
          prune = true;
          break;
        }
        ++my_idx;
      }
      if (!prune) {
        // the input must not be positionally ahead: a pending input block
        // with top label <= lab can no longer be matched
        if (my_idx < static_cast<int>(input_.size()) &&
            (input_[static_cast<std::size_t>(my_idx)] >> 16) <= lab)
          prune = true;
      }
      if (!prune) {
        new_of_old_[static_cast<std::size_t>(o)] = lab;
        old_of_new_[static_cast<std::size_t>(lab)] = o;
        dfs(lab + 1, my_idx);
        new_of_old_[static_cast<std::size_t>(o)] = -1;
        old_of_new_[static_cast<std::size_t>(lab)] = -1;
        if (found_smaller_) return;
      }
    }
  }

  int v_;
  const std::vector<int>& input_;
  std::vector<std::vector<int>> point_blocks_;
  std::vector<int> new_of_old_, old_of_new_;
  bool found_smaller_ = false;
};

}  // namespace census_detail

struct CensusResult {
  long long class_count = 0;
  long long nodes = 0;  // canonicity tests attempted
  std::vector<IncidenceStructure> representatives;
};

/// Isomorph-free generation of symmetric v_3 structures satisfying the
/// distinctness requirement, in colex block order with a canonicity test at
/// every extension. With lineal_only, any two points share at most one
/// block.
inline CensusResult enumerate_v3(int v, bool lineal_only, long long node_budget = 400000000,
                                 bool keep_representatives = true) {
  require(v >= 4 && v <= 15, "InvalidV", "census supports 4 <= v <= 15");
  CensusResult result;
  std::vector<int> blocks;
  std::vector<int> degree(static_cast<std::size_t>(v), 0);
  std::vector<std::vector<char>> pair_used(static_cast<std::size_t>(v),
                                           std::vector<char>(static_cast<std::size_t>(v), 0));

  // all candidate codes in colex order
  std::vector<int> all_codes;
  for (int c = 2; c < v; ++c)
    for (int b = 1; b < c; ++b)
      for (int a = 0; a < b; ++a) all_codes.push_back(census_detail::block_code(a, b, c));

  std::function<void(int)> rec = [&](int min_code_idx) {
    if (static_cast<int>(blocks.size()) == v) {
      // degrees are all exactly 3 here; check row distinctness
      IncidenceStructure s(v, v);
      for (int j = 0; j < v; ++j) {
        auto t = census_detail::block_decode(blocks[static_cast<std::size_t>(j)]);
        for (int p : t) s.inc.set(p, j, true);
      }
      TacticalReport rep = validate_tactical(s);
      if (!rep.points_distinct || !rep.blocks_distinct) return;
      ++result.class_count;
      if (keep_representatives) result.representatives.push_back(std::move(s));
      return;
    }
    for (std::size_t ci = static_cast<std::size_t>(min_code_idx); ci < all_codes.size(); ++ci) {
      int code = all_codes[ci];
      auto t = census_detail::block_decode(code);
      int a = t[0], b = t[1], c = t[2];
      if (degree[static_cast<std::size_t>(a)] >= 3 || degree[static_cast<std::size_t>(b)] >= 3 ||
          degree[static_cast<std::size_t>(c)] >= 3)
        continue;
      if (lineal_only && (pair_used[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] ||
                          pair_used[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] ||
                          pair_used[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)]))
        continue;
      // a point still missing blocks must be able to pick up colex-later
      // codes; the largest code containing p uses the two largest others
      bool feasible = true;
      for (int p = 0; p < v && feasible; ++p) {
        int need = 3 - degree[static_cast<std::size_t>(p)] -
                   ((p == a || p == b || p == c) ? 1 : 0);
        if (need <= 0) continue;
        int y1 = v - 1 == p ? v - 2 : v - 1;
        int y2 = (v - 2 == p || y1 == v - 2) ? v - 3 : v - 2;
        int tr[3] = {p, y2, y1};
        std::sort(tr, tr + 3);
        if (census_detail::block_code(tr[0], tr[1], tr[2]) <= code) feasible = false;
      }
      if (!feasible) continue;
      blocks.push_back(code);
      ++result.nodes;
      require(result.nodes <= node_budget, "BudgetExceeded",
              "census node budget exhausted; raise --budget");
      census_detail::MinimalityTest test(v, blocks);
      if (test.input_is_minimal()) {
        ++degree[static_cast<std::size_t>(a)];
        ++degree[static_cast<std::size_t>(b)];
        ++degree[static_cast<std::size_t>(c)];
        if (lineal_only) {
          pair_used[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
          pair_used[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] = 1;
          pair_used[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] = 1;
        }
        rec(static_cast<int>(ci) + 1);
        --degree[static_cast<std::size_t>(a)];
        --degree[static_cast<std::size_t>(b)];
        --degree[static_cast<std::size_t>(c)];
        if (lineal_only) {
          pair_used[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 0;
          pair_used[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] = 0;
          pair_used[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] = 0;
        }
      }
      blocks.pop_back();
    }
  };
  rec(0);
  return result;
}

}  // namespace geomcfg
