#include <catch2/catch_amalgamated.hpp>

#include "geomcfg/canon.hpp"
#include "geomcfg/catalog.hpp"
#include "geomcfg/registry.hpp"

using namespace geomcfg;

TEST_CASE("every catalog entry advertises its true parameters") {
  for (const CatalogEntry& e : catalog_entries()) {
    INFO(e.name);
    IncidenceStructure s = e.build();
    TacticalReport rep = validate_tactical(s);
    CHECK(rep.params.v == e.v);
    CHECK(rep.params.k == e.k);
    CHECK(rep.params.b == e.b);
    CHECK(rep.params.r == e.r);
    CHECK(rep.points_distinct);
    CHECK(rep.blocks_distinct);
  }
}

TEST_CASE("ceva parameters and small cases") {
  for (int n = 2; n <= 6; ++n) {
    TacticalReport rep = validate_tactical(ceva(n));
    CHECK(rep.params.v == n * n);
    CHECK(rep.params.k == 3);
    CHECK(rep.params.b == 3 * n);
    CHECK(rep.params.r == n);
  }
  CHECK(s_equivalence_classes(ceva(3)).sizes == std::vector<int>{3, 3, 3});
  CHECK_THROWS_AS(ceva(1), Error);
}

TEST_CASE("ceva realizations over finite fields") {
  struct Case {
    int n, p, k;
  } cases[] = {{3, 7, 1}, {2, 5, 1}, {4, 13, 1}};
  for (const Case& c : cases) {
    FieldTable f(c.p, c.k);
    CevaRealization r = ceva_realize(c.n, f);
    INFO("n=" << c.n << " q=" << f.q());
    TacticalReport rep = validate_tactical(r.extracted);
    CHECK(rep.params.v == c.n * c.n);
    CHECK(rep.params.b == 3 * c.n);
    CHECK(is_isomorphic(r.extracted, ceva(c.n)));
    // under this line orientation the observed concurrency constant is the
    // unit element
    CHECK(r.concurrency_constant == 1);
  }
  FieldTable f5(5, 1);
  CHECK_THROWS_AS(ceva_realize(3, f5), Error);
}

TEST_CASE("ceva groups contain the coordinate symmetries") {
  // the geometric group mu_n^2 : S_3 has order 6n^2; abstractly the
  // multiplicative unit action joins in, so 6n^2 divides the proper order
  for (int n : {2, 4, 5}) {
    AutomorphismGroup g = automorphism_group(ceva(n), true);
    INFO(n);
    CHECK(g.proper_order >= 6 * n * n);
    CHECK(g.proper_order % (6 * n * n) == 0);
  }
  AutomorphismGroup g3 = automorphism_group(ceva(3), true);
  CHECK(g3.full_order == 216);
  CHECK(g3.has_switch);
}

TEST_CASE("modular coset systems match the closed form") {
  CHECK(subgroup_count_formula(2) == 3);
  CHECK(subgroup_count_formula(3) == 4);
  CHECK(subgroup_count_formula(4) == 6);
  CHECK(subgroup_count_formula(12) == 24);
  for (int n = 2; n <= 12; ++n) {
    ModularCosetSystem sys = modular_cosets(n);
    INFO("N=" << n);
    CHECK(static_cast<long long>(sys.subgroups.size()) == subgroup_count_formula(n));
    for (const auto& sub : sys.subgroups) CHECK(static_cast<int>(sub.size()) == n);
    CHECK(static_cast<long long>(sys.cosets.size()) ==
          subgroup_count_formula(n) * static_cast<long long>(n));
  }
}

TEST_CASE("modular configurations") {
  for (int n = 2; n <= 6; ++n) {
    IncidenceStructure s = modular_config(n);
    TacticalReport rep = validate_tactical(s);
    long long sn = subgroup_count_formula(n);
    CHECK(rep.params.v == n * sn);
    CHECK(rep.params.k == n);
    CHECK(rep.params.b == n * n);
    CHECK(rep.params.r == sn);
  }
  // N=3: the dual is the Hesse (9_4,12_3) structure
  CHECK(is_isomorphic(dual(modular_config(3)), hesse_structure()));
}

TEST_CASE("desargues: abstract and realized") {
  IncidenceStructure d = desargues();
  TacticalReport rep = validate_tactical(d);
  CHECK(rep.params.v == 10);
  CHECK(rep.params.k == 3);
  CHECK(is_lineal(d));
  // p_12 lies exactly on l_123, l_124, l_125 (blocks containing {1,2})
  CHECK(d.inc.row_popcount(0) == 3);
  CHECK(d.inc.get(0, 0));  // {1,2} in {1,2,3}
  CHECK(d.inc.get(0, 1));  // {1,2,4}
  CHECK(d.inc.get(0, 2));  // {1,2,5}

  DesarguesRealization r = desargues_realize();
  CHECK(validate_tactical(r.extracted).params.v == 10);
  CHECK(is_isomorphic(r.extracted, d));
  CHECK(r.extracted.inc == d.inc);  // same duad/triad indexing
}

TEST_CASE("reye realization") {
  ReyeRealization r = reye();
  TacticalReport rep = validate_tactical(r.extracted);
  CHECK(rep.params.v == 12);
  CHECK(rep.params.k == 4);
  CHECK(rep.params.b == 16);
  CHECK(rep.params.r == 3);
  // the centre (index 8) lies exactly on the 4 diagonals (blocks 12..15)
  CHECK(r.extracted.inc.row_popcount(8) == 4);
  for (int j = 12; j < 16; ++j) CHECK(r.extracted.inc.get(8, j));
  // each infinite point lies on 4 parallel edges
  for (int x = 9; x < 12; ++x) {
    CHECK(r.extracted.inc.row_popcount(x) == 4);
    for (int j = 12; j < 16; ++j) CHECK_FALSE(r.extracted.inc.get(x, j));
  }
}

TEST_CASE("hesse-salmon agrees with reye abstractly") {
  IncidenceStructure hs = hesse_salmon();
  TacticalReport rep = validate_tactical(hs);
  CHECK(rep.params.v == 12);
  CHECK(rep.params.k == 4);
  CHECK(rep.params.b == 16);
  CHECK(rep.params.r == 3);
  // A_1 rows: blocks 0..3 by construction
  CHECK(hs.inc.row_popcount(0) == 4);
  CHECK(is_isomorphic(hs, reye().extracted));
}

TEST_CASE("complete configurations") {
  for (int v = 2; v <= 8; ++v) {
    IncidenceStructure s = complete_configuration(v);
    TacticalReport rep = validate_tactical(s);
    CHECK(rep.params.v == v);
    CHECK(rep.params.k == v - 1);
    CHECK(rep.params.r == v - 1);
  }
  CHECK(is_isomorphic(complete_configuration(4), four3()));
  CHECK(is_isomorphic(complete_configuration(6), dual(complete_configuration(6))));
}

TEST_CASE("generic point-hyperplane realization") {
  for (const IncidenceStructure& s :
       {fano(), cremona_richmond(), complete_configuration(5), desargues()}) {
    PointHyperplaneRealization r = generic_point_hyperplane_realization(s);
    CHECK(r.matches_input);
    CHECK(r.extracted.inc == s.inc);
  }
  // moment-curve coordinates are exact integers
  PointHyperplaneRealization rf = generic_point_hyperplane_realization(fano());
  CHECK(rf.points.points.size() == 7);
  CHECK(rf.points.n == 3);
  CHECK(rf.hyperplanes.size() == 7);
}

TEST_CASE("extract_incidence basics") {
  RationalPointSet pts;
  pts.n = 2;
  pts.add(IntVec{1, 0, 0});
  pts.add(IntVec{0, 1, 0});
  pts.add(IntVec{1, 1, 0});
  pts.add(IntVec{0, 0, 1});
  std::vector<BlockSpec> blocks;
  blocks.push_back(BlockSpec::span({0, 1}));
  IncidenceStructure s = extract_incidence(pts, blocks);
  CHECK(s.inc.get(0, 0));
  CHECK(s.inc.get(1, 0));
  CHECK(s.inc.get(2, 0));  // collinear
  CHECK_FALSE(s.inc.get(3, 0));
}
