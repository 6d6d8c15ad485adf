#include <catch2/catch_amalgamated.hpp>

#include "geomcfg/canon.hpp"
#include "geomcfg/incidence.hpp"
#include "geomcfg/registry.hpp"
#include "oracles.hpp"

using namespace geomcfg;

TEST_CASE("tactical validation on the catalog") {
  auto fano_s = fano();
  TacticalReport rep = validate_tactical(fano_s);
  CHECK(rep.params.v == 7);
  CHECK(rep.params.k == 3);
  CHECK(rep.params.b == 7);
  CHECK(rep.params.r == 3);
  CHECK(rep.points_distinct);
  CHECK(rep.blocks_distinct);

  IncidenceStructure one(1, 1);
  one.inc.set(0, 0, true);
  TacticalReport r1 = validate_tactical(one);
  CHECK(r1.params == ConfigParams{1, 1, 1, 1, std::nullopt});

  TacticalReport rc = validate_tactical(ceva(4));
  CHECK(rc.params.v == 16);
  CHECK(rc.params.k == 3);
  CHECK(rc.params.b == 12);
  CHECK(rc.params.r == 4);
}

TEST_CASE("non-tactical structures are rejected with the offender") {
  IncidenceStructure s(3, 2);
  s.inc.set(0, 0, true);
  s.inc.set(0, 1, true);
  s.inc.set(1, 0, true);
  s.inc.set(2, 0, true);
  CHECK_THROWS_AS(validate_tactical(s), Error);
}

TEST_CASE("dual is an involution and transposes parameters") {
  IncidenceStructure c4 = ceva(4);
  IncidenceStructure d = dual(c4);
  TacticalReport rep = validate_tactical(d);
  CHECK(rep.params.v == 12);
  CHECK(rep.params.k == 4);
  CHECK(rep.params.b == 16);
  CHECK(rep.params.r == 3);
  CHECK(dual(d) == c4);

  IncidenceStructure r = reye().extracted;
  CHECK(dual(dual(r)) == r);
}

TEST_CASE("complement of a symmetric structure") {
  IncidenceStructure f = fano();
  IncidenceStructure c = complement_of(f);
  TacticalReport rep = validate_tactical(c);
  CHECK(rep.params.k == 4);
  CHECK(rep.params.r == 4);
  CHECK(complement_of(c) == f);
  CHECK_THROWS_AS(complement_of(ceva(4)), Error);

  KummerConfig k2 = kummer_configuration(2);
  IncidenceStructure k10 = complement_of(k2.structure);
  CHECK(validate_tactical(k10).params.k == 10);
}

TEST_CASE("direct sum is block-diagonal and disconnected") {
  IncidenceStructure f = fano();
  IncidenceStructure sum = direct_sum(f, f);
  TacticalReport rep = validate_tactical(sum);
  CHECK(rep.params.v == 14);
  CHECK(rep.params.k == 3);
  CHECK(rep.params.b == 14);
  CHECK(rep.params.r == 3);
  CHECK_FALSE(is_connected(sum));

  IncidenceStructure c2 = ceva(2);
  IncidenceStructure cc = direct_sum(c2, c2);
  TacticalReport rc = validate_tactical(cc);
  CHECK(rc.params.v == 8);
  CHECK(rc.params.k == 3);
  CHECK(rc.params.b == 12);
  CHECK(rc.params.r == 2);

  CHECK_THROWS_AS(direct_sum(f, ceva(4)), Error);
}

TEST_CASE("connectivity matches the BFS oracle") {
  IncidenceStructure one(1, 1);
  one.inc.set(0, 0, true);
  CHECK(is_connected(one));
  for (const CatalogEntry& e : catalog_entries()) {
    IncidenceStructure s = e.build();
    CHECK(is_connected(s) == oracles::bfs_connected(s));
  }
  IncidenceStructure f = fano();
  CHECK(is_connected(f));
  CHECK(oracles::bfs_connected(direct_sum(f, f)) == false);
}

TEST_CASE("S-equivalence classes of the three 9_3 configurations") {
  CHECK(s_equivalence_classes(ceva(3)).sizes == std::vector<int>{3, 3, 3});
  CHECK(s_equivalence_classes(brianchon_pascal()).sizes == std::vector<int>{3, 3, 3});
  CHECK(s_equivalence_classes(nine3_cyclic()).sizes == std::vector<int>{9});
}

TEST_CASE("point deletion: Hesse to Moebius-Kantor, Fano residue") {
  IncidenceStructure h = hesse_structure();
  for (int x = 0; x < 9; ++x) {
    IncidenceStructure del = delete_point(h, x);
    TacticalReport rep = validate_tactical(del);
    CHECK(rep.params.v == 8);
    CHECK(rep.params.k == 3);
    CHECK(rep.params.b == 8);
    CHECK(rep.params.r == 3);
  }
  IncidenceStructure fd = delete_point(fano(), 0);
  TacticalReport rep = validate_tactical(fd);
  CHECK(rep.params.v == 6);
  CHECK(rep.params.k == 2);
  CHECK(rep.params.b == 4);
  CHECK(rep.params.r == 3);
  CHECK_THROWS_AS(delete_point(fano(), 7), Error);
}

TEST_CASE("all nine Hesse deletions give the same structure up to isomorphism") {
  IncidenceStructure h = hesse_structure();
  auto cert = certificate(delete_point(h, 0));
  for (int x = 1; x < 9; ++x) CHECK(certificate(delete_point(h, x)) == cert);
  CHECK(certificate(mobius_kantor()) == cert);
}

TEST_CASE("linealness") {
  CHECK(is_lineal(fano()));
  CHECK_FALSE(is_lineal(four3()));
  CHECK_FALSE(is_lineal(kummer_configuration(2).structure));
  CHECK(is_lineal(cremona_richmond()));
}

TEST_CASE("S-class multiset is invariant under relabeling") {
  IncidenceStructure s = six3();
  std::vector<int> pperm{3, 1, 4, 0, 5, 2};
  std::vector<int> bperm{2, 0, 5, 1, 3, 4};
  IncidenceStructure t(s.v, s.b);
  for (int x = 0; x < s.v; ++x)
    for (int j = 0; j < s.b; ++j)
      if (s.inc.get(x, j))
        t.inc.set(pperm[static_cast<std::size_t>(x)], bperm[static_cast<std::size_t>(j)], true);
  CHECK(s_equivalence_classes(t).sizes == s_equivalence_classes(s).sizes);
}
