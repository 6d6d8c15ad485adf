#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "geomcfg/common.hpp"
#include "geomcfg/incidence.hpp"

namespace geomcfg {

// The GF(2) models live on the ground set [1, 2g+2], held as bitmasks on bits
// 0..2g+1. Classes are taken modulo complementation; the canonical
// representative is the subset not containing the top element 2g+2, so
// canonicalization is a single mask test.

namespace gf2 {

inline std::uint32_t ground_mask(int g) { return (std::uint32_t(1) << (2 * g + 2)) - 1; }
inline std::uint32_t top_bit(int g) { return std::uint32_t(1) << (2 * g + 1); }

inline std::uint32_t canonical(std::uint32_t s, int g) {
  return (s & top_bit(g)) ? (s ^ ground_mask(g)) : s;
}

}  // namespace gf2

/// Even-cardinality subset of [1,2g+2] modulo complementation: an element of
/// the 2g-dimensional symplectic GF(2)-space W_g.
struct EvenClass {
  int g = 0;
  std::uint32_t rep = 0;  // canonical: even popcount, top element absent

  EvenClass() = default;
  EvenClass(int g_, std::uint32_t subset) : g(g_), rep(gf2::canonical(subset, g_)) {
    require((subset & ~gf2::ground_mask(g_)) == 0, "InvalidParams", "subset outside ground set");
    require(__builtin_popcount(subset) % 2 == 0, "InvalidParams",
            "even class needs even cardinality");
  }

  static EvenClass from_elements(int g, std::initializer_list<int> elems) {
    std::uint32_t m = 0;
    for (int e : elems) m |= std::uint32_t(1) << (e - 1);
    return EvenClass(g, m);
  }

  EvenClass plus(const EvenClass& o) const {
    require(g == o.g, "GenusMismatch", "class arithmetic across different g");
    EvenClass out;
    out.g = g;
    out.rep = gf2::canonical(rep ^ o.rep, g);
    return out;
  }

  bool is_zero() const { return rep == 0; }

  /// Dense index in [0, 2^{2g}): bit 0 of the representative is determined by
  /// the parity of the others, so it is dropped.
  int index() const { return static_cast<int>(rep >> 1); }

  static EvenClass from_index(int g, int idx) {
    std::uint32_t hi = static_cast<std::uint32_t>(idx) << 1;
    std::uint32_t rep = hi | (__builtin_popcount(hi) % 2);
    EvenClass out;
    out.g = g;
    out.rep = rep;
    return out;
  }

  friend bool operator==(const EvenClass& a, const EvenClass& b) {
    return a.g == b.g && a.rep == b.rep;
  }
  friend bool operator<(const EvenClass& a, const EvenClass& b) { return a.rep < b.rep; }
};

/// Theta-characteristic class: subset of [1,2g+2] with popcount = g+1 (mod 2)
/// modulo complementation, encoding a quadratic form refining e_g.
struct CharClass {
  int g = 0;
  std::uint32_t rep = 0;

  CharClass() = default;
  CharClass(int g_, std::uint32_t subset) : g(g_), rep(gf2::canonical(subset, g_)) {
    require((subset & ~gf2::ground_mask(g_)) == 0, "InvalidParams", "subset outside ground set");
    require(__builtin_popcount(subset) % 2 == (g_ + 1) % 2, "InvalidParams",
            "characteristic class needs cardinality = g+1 mod 2");
  }

  static CharClass from_elements(int g, std::initializer_list<int> elems) {
    std::uint32_t m = 0;
    for (int e : elems) m |= std::uint32_t(1) << (e - 1);
    return CharClass(g, m);
  }

  /// Even type iff popcount = g+1 (mod 4); complementation shifts the count
  /// by a multiple of 4, so the type is representative-independent.
  bool even_type() const { return __builtin_popcount(rep) % 4 == (g + 1) % 4; }

  CharClass translated(const EvenClass& t) const {
    require(g == t.g, "GenusMismatch", "translate across different g");
    CharClass out;
    out.g = g;
    out.rep = gf2::canonical(rep ^ t.rep, g);
    return out;
  }

  int index() const { return static_cast<int>(rep >> 1); }

  static CharClass from_index(int g, int idx) {
    std::uint32_t hi = static_cast<std::uint32_t>(idx) << 1;
    std::uint32_t rep = hi;
    if (__builtin_popcount(rep) % 2 != (g + 1) % 2) rep |= 1;
    CharClass out;
    out.g = g;
    out.rep = rep;
    return out;
  }

  friend bool operator==(const CharClass& a, const CharClass& b) {
    return a.g == b.g && a.rep == b.rep;
  }
};

/// The symplectic pairing #(A intersect B) mod 2, nondegenerate on W_g.
inline int symplectic_form(const EvenClass& a, const EvenClass& b) {
  require(a.g == b.g, "GenusMismatch", "pairing across different g");
  return __builtin_popcount(a.rep & b.rep) & 1;
}

/// q_S(T) = #T/2 + #(T intersect S) mod 2, independent of both class
/// representatives: swapping T for its complement changes the value by
/// (g+1) + #S = 0 mod 2, and swapping S changes #(T cap S) by the even #T.
inline int quad_eval(const CharClass& s, const EvenClass& t) {
  require(s.g == t.g, "GenusMismatch", "evaluation across different g");
  int half = __builtin_popcount(t.rep) / 2;
  int inter = __builtin_popcount(t.rep & s.rep);
  return (half + inter) & 1;
}

struct KummerConfig {
  IncidenceStructure structure;
  int g = 0;
  int k = 0;             // common degree 2^{g-1}(2^g - 1)
  bool degenerate = false;  // g = 1, where lambda is undefined
};

/// Kummer configuration: points W_g, blocks Q_g, block S incident to the
/// points where q_S takes the value 1 for even-type S and 0 for odd-type S.
inline KummerConfig kummer_configuration(int g, bool allow_g4 = false) {
  require(g >= 1 && (g <= 3 || (g == 4 && allow_g4)), "GenusOutOfRange",
          "supported g is 1..3 (4 behind the explicit flag)");
  int n = 1 << (2 * g);
  KummerConfig out;
  out.g = g;
  out.k = (1 << (g - 1)) * ((1 << g) - 1);
  out.degenerate = g == 1;
  out.structure = IncidenceStructure(n, n);
  for (int jj = 0; jj < n; ++jj) {
    CharClass s = CharClass::from_index(g, jj);
    int want = s.even_type() ? 1 : 0;
    for (int ii = 0; ii < n; ++ii) {
      EvenClass t = EvenClass::from_index(g, ii);
      if (quad_eval(s, t) == want) out.structure.inc.set(ii, jj, true);
    }
  }
  return out;
}

struct ConfigAutomorphism {
  std::vector<int> point_map;
  std::vector<int> block_map;
};

/// Translation by t: T' -> T'+t on points, S -> S+t on blocks. Composing over
/// all t realizes the group F_2^{2g} acting regularly on points.
inline ConfigAutomorphism translation_symmetry(int g, const EvenClass& t) {
  require(t.g == g, "GenusMismatch", "translation class has wrong g");
  int n = 1 << (2 * g);
  ConfigAutomorphism a;
  a.point_map.resize(static_cast<std::size_t>(n));
  a.block_map.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    a.point_map[static_cast<std::size_t>(i)] = EvenClass::from_index(g, i).plus(t).index();
  for (int j = 0; j < n; ++j)
    a.block_map[static_cast<std::size_t>(j)] = CharClass::from_index(g, j).translated(t).index();
  return a;
}

/// Symplectic transvection x -> x + e(x,v) v on points; the block map
/// transports the quadratic form by table lookup over Q_g.
inline ConfigAutomorphism transvection_symmetry(int g, const EvenClass& v) {
  require(v.g == g, "GenusMismatch", "transvection class has wrong g");
  require(!v.is_zero(), "ZeroVector", "transvection needs a nonzero direction");
  int n = 1 << (2 * g);
  ConfigAutomorphism a;
  a.point_map.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    EvenClass x = EvenClass::from_index(g, i);
    a.point_map[static_cast<std::size_t>(i)] =
        symplectic_form(x, v) ? x.plus(v).index() : x.index();
  }
  a.block_map.assign(static_cast<std::size_t>(n), -1);
  for (int j = 0; j < n; ++j) {
    CharClass s = CharClass::from_index(g, j);
    // find the unique S' with q_{S'} = q_S composed with the (involutive)
    // point map
    for (int jj = 0; jj < n; ++jj) {
      CharClass cand = CharClass::from_index(g, jj);
      bool match = true;
      for (int i = 0; i < n && match; ++i) {
        EvenClass x = EvenClass::from_index(g, i);
        EvenClass pre = EvenClass::from_index(g, a.point_map[static_cast<std::size_t>(i)]);
        if (quad_eval(cand, x) != quad_eval(s, pre)) match = false;
      }
      if (match) {
        a.block_map[static_cast<std::size_t>(j)] = jj;
        break;
      }
    }
    require(a.block_map[static_cast<std::size_t>(j)] >= 0, "InternalError",
            "no transported form found");
  }
  return a;
}

inline bool preserves_incidence(const IncidenceStructure& s, const ConfigAutomorphism& a) {
  for (int x = 0; x < s.v; ++x)
    for (int j = 0; j < s.b; ++j)
      if (s.inc.get(x, j) !=
          s.inc.get(a.point_map[static_cast<std::size_t>(x)], a.block_map[static_cast<std::size_t>(j)]))
        return false;
  return true;
}

namespace detail {

inline std::vector<std::array<int, 2>> duads6() {
  std::vector<std::array<int, 2>> out;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b) out.push_back({a, b});
  return out;
}

inline std::vector<std::array<int, 6>> matchings6() {
  // perfect matchings {I,J,K} of [1,6], each sorted, listed deterministically
  std::vector<std::array<int, 6>> out;
  std::array<bool, 7> used{};
  std::function<void(std::array<int, 6>&, int)> rec = [&](std::array<int, 6>& cur, int depth) {
    if (depth == 3) {
      out.push_back(cur);
      return;
    }
    int first = 1;
    while (used[static_cast<std::size_t>(first)]) ++first;
    used[static_cast<std::size_t>(first)] = true;
    for (int second = first + 1; second <= 6; ++second) {
      if (used[static_cast<std::size_t>(second)]) continue;
      used[static_cast<std::size_t>(second)] = true;
      cur[static_cast<std::size_t>(2 * depth)] = first;
      cur[static_cast<std::size_t>(2 * depth + 1)] = second;
      rec(cur, depth + 1);
      used[static_cast<std::size_t>(second)] = false;
    }
    used[static_cast<std::size_t>(first)] = false;
  };
  std::array<int, 6> cur{};
  rec(cur, 0);
  return out;
}

}  // namespace detail

/// Cremona-Richmond 15_3: duads of [1,6] against the 15 perfect matchings,
/// incidence by membership. Lineal and symmetric.
inline IncidenceStructure cremona_richmond() {
  auto duads = detail::duads6();
  auto matchings = detail::matchings6();
  IncidenceStructure s(15, 15);
  for (int x = 0; x < 15; ++x) {
    for (int j = 0; j < 15; ++j) {
      const auto& m = matchings[static_cast<std::size_t>(j)];
      for (int t = 0; t < 3; ++t)
        if (m[static_cast<std::size_t>(2 * t)] == duads[static_cast<std::size_t>(x)][0] &&
            m[static_cast<std::size_t>(2 * t + 1)] == duads[static_cast<std::size_t>(x)][1])
          s.inc.set(x, j, true);
    }
    s.point_labels.push_back("p" + std::to_string(duads[static_cast<std::size_t>(x)][0]) +
                             std::to_string(duads[static_cast<std::size_t>(x)][1]));
  }
  for (int j = 0; j < 15; ++j) {
    const auto& m = matchings[static_cast<std::size_t>(j)];
    std::string l = "l";
    for (int t = 0; t < 6; ++t) l += std::to_string(m[static_cast<std::size_t>(t)]);
    s.block_labels.push_back(l);
  }
  return s;
}

struct Plane {
  // the three nonzero classes of a 2-dimensional subspace of W_2, ascending
  std::array<std::uint32_t, 3> nonzero;

  friend bool operator<(const Plane& a, const Plane& b) { return a.nonzero < b.nonzero; }
  friend bool operator==(const Plane& a, const Plane& b) { return a.nonzero == b.nonzero; }
};

struct PlaneCensus {
  int total = 0;
  int isotropic = 0;
  int nondegenerate = 0;
  int degenerate_radical = 0;  // rank-1 restrictions; none occur (rank is even)
  // nondegenerate planes of triangle shape {0,ab,bc,ca}, grouped into
  // complementary-triple pairs with identical incidence behaviour
  int triangle_pairs = 0;
  std::vector<Plane> isotropic_planes;
  std::vector<Plane> nondegenerate_planes;
  std::vector<std::uint32_t> triangle_pair_reps;  // 3-subset masks without element 6
};

/// Census of the 35 planes of W (g = 2 over [1,6]), classified by the
/// restriction of the symplectic form.
inline PlaneCensus plane_census_g2() {
  const int g = 2;
  PlaneCensus census;
  std::vector<Plane> seen;
  for (int i = 1; i < 16; ++i)
    for (int j = i + 1; j < 16; ++j) {
      EvenClass u = EvenClass::from_index(g, i);
      EvenClass w = EvenClass::from_index(g, j);
      EvenClass sum = u.plus(w);
      Plane pl;
      pl.nonzero = {u.rep, w.rep, sum.rep};
      std::sort(pl.nonzero.begin(), pl.nonzero.end());
      if (std::find(seen.begin(), seen.end(), pl) != seen.end()) continue;
      seen.push_back(pl);
      if (symplectic_form(u, w) == 0 && symplectic_form(u, sum) == 0 &&
          symplectic_form(w, sum) == 0)
        census.isotropic_planes.push_back(pl);
      else
        census.nondegenerate_planes.push_back(pl);
    }
  std::sort(census.isotropic_planes.begin(), census.isotropic_planes.end());
  std::sort(census.nondegenerate_planes.begin(), census.nondegenerate_planes.end());
  census.total = static_cast<int>(seen.size());
  census.isotropic = static_cast<int>(census.isotropic_planes.size());
  census.nondegenerate = static_cast<int>(census.nondegenerate_planes.size());
  census.degenerate_radical =
      census.total - census.isotropic - census.nondegenerate;
  // triangle planes {0,{a,b},{b,c},{a,c}} per 3-subset {a,b,c}; complementary
  // subsets give distinct planes with the same intersection pattern, counted
  // here as pairs keyed by the representative avoiding element 6
  for (std::uint32_t triple = 0; triple < 64; ++triple) {
    if (__builtin_popcount(triple) != 3 || (triple & 0x20u)) continue;
    census.triangle_pair_reps.push_back(triple);
  }
  census.triangle_pairs = static_cast<int>(census.triangle_pair_reps.size());
  return census;
}

/// The (15_4,10_6) configuration: isotropic planes against the ten
/// complementary pairs of triangle planes, incident when the planes meet only
/// in zero.
inline IncidenceStructure isotropic_anisotropic_config() {
  const int g = 2;
  PlaneCensus census = plane_census_g2();
  IncidenceStructure s(15, 10);
  for (int x = 0; x < 15; ++x) {
    const Plane& iso = census.isotropic_planes[static_cast<std::size_t>(x)];
    for (int j = 0; j < 10; ++j) {
      std::uint32_t triple = census.triangle_pair_reps[static_cast<std::size_t>(j)];
      // nonzero classes of the triangle plane: the three duads inside triple
      std::array<std::uint32_t, 3> tri;
      int idx = 0;
      for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) {
          std::uint32_t d = (std::uint32_t(1) << a) | (std::uint32_t(1) << b);
          if ((d & triple) == d) tri[static_cast<std::size_t>(idx++)] = gf2::canonical(d, g);
        }
      bool trivial_meet = true;
      for (std::uint32_t e1 : iso.nonzero)
        for (std::uint32_t e2 : tri)
          if (e1 == e2) trivial_meet = false;
      if (trivial_meet) s.inc.set(x, j, true);
    }
  }
  return s;
}

}  // namespace geomcfg
