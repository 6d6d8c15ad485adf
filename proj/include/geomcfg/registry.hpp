#pragma once

#include <functional>
#include <string>
#include <vector>

#include "geomcfg/catalog.hpp"
#include "geomcfg/gf.hpp"
#include "geomcfg/symplectic.hpp"

namespace geomcfg {

struct CatalogEntry {
  std::string name;
  std::string summary;
  int v, k, b, r;  // advertised parameters
  std::function<IncidenceStructure()> build;
};

inline IncidenceStructure fano() {
  FieldTable f2(2, 1);
  return pg_configuration(2, 0, 1, f2);
}

/// The nine points of the affine plane over GF(3) with all twelve lines: the
/// (9_4,12_3) structure whose deletions give the 8_3 configuration.
inline IncidenceStructure hesse_structure() {
  std::vector<std::vector<int>> blocks;
  for (int c = 0; c < 3; ++c) blocks.push_back({3 * c + 0, 3 * c + 1, 3 * c + 2});
  for (int c = 0; c < 3; ++c) blocks.push_back({c, 3 + c, 6 + c});
  for (int m = 1; m < 3; ++m)
    for (int c = 0; c < 3; ++c) {
      std::vector<int> line;
      for (int x = 0; x < 3; ++x) line.push_back(3 * x + ((m * x + c) % 3));
      std::sort(line.begin(), line.end());
      blocks.push_back(line);
    }
  return IncidenceStructure::from_blocks(9, blocks);
}

inline IncidenceStructure mobius_kantor() { return delete_point(hesse_structure(), 0); }

inline IncidenceStructure four3() {
  return IncidenceStructure::from_blocks(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

inline IncidenceStructure five3() {
  return IncidenceStructure::from_blocks(5, {{0, 1, 4}, {0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {0, 3, 4}});
}

inline IncidenceStructure six3() {
  return IncidenceStructure::from_blocks(
      6, {{0, 2, 3}, {0, 3, 5}, {0, 1, 4}, {1, 2, 5}, {1, 3, 4}, {2, 4, 5}});
}

/// First of the three 9_3 configurations (hexagon sides and diagonals with
/// Brianchon point); isomorphic to Ceva(3).
inline IncidenceStructure brianchon_pascal() {
  return IncidenceStructure::from_blocks(9, {{0, 1, 2},
                                             {3, 4, 5},
                                             {6, 7, 8},
                                             {0, 3, 6},
                                             {1, 4, 7},
                                             {2, 5, 8},
                                             {0, 4, 8},
                                             {1, 5, 6},
                                             {2, 3, 7}});
}

/// Third 9_3 configuration, the non-regular one with S-classes {3,6}.
inline IncidenceStructure nine3_s63() {
  return IncidenceStructure::from_blocks(9, {{0, 1, 2},
                                             {0, 3, 4},
                                             {1, 3, 5},
                                             {2, 3, 6},
                                             {1, 4, 7},
                                             {5, 6, 7},
                                             {0, 5, 8},
                                             {4, 6, 8},
                                             {2, 7, 8}});
}

/// Second 9_3 configuration: the cyclic one, blocks {i, i+1, i+3} mod 9.
inline IncidenceStructure nine3_cyclic() {
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < 9; ++i) {
    std::vector<int> blk{i, (i + 1) % 9, (i + 3) % 9};
    std::sort(blk.begin(), blk.end());
    blocks.push_back(blk);
  }
  return IncidenceStructure::from_blocks(9, blocks);
}

inline std::vector<CatalogEntry> catalog_entries() {
  std::vector<CatalogEntry> out;
  auto add = [&](std::string name, std::string summary, int v, int k, int b, int r,
                 std::function<IncidenceStructure()> fn) {
    out.push_back({std::move(name), std::move(summary), v, k, b, r, std::move(fn)});
  };
  add("fano", "projective plane of order 2", 7, 3, 7, 3, [] { return fano(); });
  add("four3", "tetrahedron vertices against faces", 4, 3, 4, 3, [] { return four3(); });
  add("five3", "the unique 5_3", 5, 3, 5, 3, [] { return five3(); });
  add("six3", "the unique 6_3", 6, 3, 6, 3, [] { return six3(); });
  add("mobius-kantor", "the unique line-point 8_3", 8, 3, 8, 3, [] { return mobius_kantor(); });
  add("brianchon-pascal", "9_3 with S-classes {3,3,3}", 9, 3, 9, 3,
      [] { return brianchon_pascal(); });
  add("nine3-cyclic", "9_3 with a single S-class", 9, 3, 9, 3, [] { return nine3_cyclic(); });
  add("nine3-s63", "the non-regular 9_3, S-classes {3,6}", 9, 3, 9, 3, [] { return nine3_s63(); });
  add("hesse", "affine plane AG(2,3): 9 points, 12 lines", 9, 4, 12, 3,
      [] { return hesse_structure(); });
  add("desargues", "duads against triads of [1,5]", 10, 3, 10, 3, [] { return desargues(); });
  add("reye", "octahedral point-line configuration", 12, 4, 16, 3,
      [] { return reye().extracted; });
  add("hesse-salmon", "twelve contact points on sixteen lines", 12, 4, 16, 3,
      [] { return hesse_salmon(); });
  add("cremona-richmond", "duads against synthemes", 15, 3, 15, 3,
      [] { return cremona_richmond(); });
  add("iso-aniso", "isotropic against anisotropic planes of W_2", 15, 4, 10, 6,
      [] { return isotropic_anisotropic_config(); });
  for (int n = 2; n <= 5; ++n)
    add("ceva-" + std::to_string(n), "Ceva configuration", n * n, 3, 3 * n, n,
        [n] { return ceva(n); });
  for (int n = 2; n <= 4; ++n) {
    int s = static_cast<int>(subgroup_count_formula(n));
    add("modular-" + std::to_string(n), "cosets of cyclic order-N subgroups", n * s, n, n * n, s,
        [n] { return modular_config(n); });
  }
  for (int v = 4; v <= 7; ++v)
    add("complete-" + std::to_string(v), "the unique v_{v-1}", v, v - 1, v, v - 1,
        [v] { return complete_configuration(v); });
  add("kummer-2", "Kummer 16_6 from quadratic forms", 16, 6, 16, 6,
      [] { return kummer_configuration(2).structure; });
  add("mukai-2", "self-paired model of PG(2,4)", 21, 5, 21, 5, [] {
    FieldTable f4(2, 2);
    return mukai_incidence(2, f4);
  });
  add("pg-3-0-1-2", "points against lines of PG(3,2)", 15, 7, 35, 3, [] {
    FieldTable f2(2, 1);
    return pg_configuration(3, 0, 1, f2);
  });
  return out;
}

inline const CatalogEntry* find_catalog_entry(const std::string& name) {
  static const std::vector<CatalogEntry> entries = catalog_entries();
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace geomcfg
