#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "geomcfg/canon.hpp"
#include "geomcfg/design.hpp"
#include "geomcfg/gf.hpp"
#include "geomcfg/registry.hpp"

using namespace geomcfg;

TEST_CASE("field arithmetic over small fields") {
  FieldTable f7(7, 1);
  CHECK(f7.q() == 7);
  CHECK(f7.add(3, 5) == 1);
  CHECK(f7.mul(3, 5) == 1);
  CHECK(f7.inv(3) == 5);
  CHECK(f7.pow(3, 6) == 1);

  FieldTable f4(2, 2);
  CHECK(f4.q() == 4);
  // modulus x^2+x+1: the two non-unit elements are inverse to each other
  CHECK(f4.mul(2, 3) == 1);
  CHECK(f4.add(2, 3) == 1);
  for (int a = 1; a < 4; ++a) CHECK(f4.mul(a, f4.inv(a)) == 1);

  FieldTable f9(3, 2);
  CHECK(f9.q() == 9);
  for (int a = 1; a < 9; ++a) {
    CHECK(f9.mul(a, f9.inv(a)) == 1);
    CHECK(f9.pow(a, 8) == 1);
  }
  // Frobenius is additive and multiplicative, fixes exactly GF(3)
  int fixed = 0;
  for (int a = 0; a < 9; ++a) {
    for (int b = 0; b < 9; ++b) {
      CHECK(f9.frobenius(f9.add(a, b)) == f9.add(f9.frobenius(a), f9.frobenius(b)));
      CHECK(f9.frobenius(f9.mul(a, b)) == f9.mul(f9.frobenius(a), f9.frobenius(b)));
    }
    if (f9.frobenius(a) == a) ++fixed;
  }
  CHECK(fixed == 3);
}

TEST_CASE("field axioms hold exhaustively on GF(8) and GF(9)") {
  for (auto [p, k] : {std::pair<int, int>{2, 3}, {3, 2}}) {
    FieldTable f(p, k);
    int q = f.q();
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (int c = 0; c < q; ++c) {
          REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
  }
}

TEST_CASE("modulus choice is the documented lexicographic one") {
  // coefficient lists compared low degree first
  CHECK(FieldTable(2, 2).modulus() == std::vector<int>{1, 1, 1});     // x^2+x+1
  CHECK(FieldTable(2, 3).modulus() == std::vector<int>{1, 0, 1, 1});  // x^3+x^2+1
  CHECK(FieldTable(3, 2).modulus() == std::vector<int>{1, 0, 1});     // x^2+1
}

TEST_CASE("gaussian binomials") {
  CHECK(gaussian_binomial(0, 2, 2) == 7);
  CHECK(gaussian_binomial(0, 0, 2) == 1);
  CHECK(gaussian_binomial(0, 0, 5) == 1);
  CHECK(gaussian_binomial(1, 3, 2) == 35);
  CHECK(gaussian_binomial(1, 2, 3) == 13);
  CHECK(gaussian_binomial(-1, 4, 2) == 1);
}

TEST_CASE("subspace enumeration counts match the closed form") {
  FieldTable f2(2, 1);
  CHECK(enumerate_subspaces(2, 0, f2).size() == 7);
  CHECK(enumerate_subspaces(3, 1, f2).size() == 35);
  FieldTable f3(3, 1);
  auto pts = enumerate_subspaces(1, 0, f3);
  CHECK(pts.size() == 4);
}

TEST_CASE("brute-force line count of PG(3,2) by spanning pairs") {
  // independent of the RREF enumeration: spans of all point pairs, deduped
  FieldTable f2(2, 1);
  auto pts = enumerate_subspaces(3, 0, f2);
  std::set<std::set<std::vector<int>>> lines;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      std::set<std::vector<int>> line;
      line.insert(pts[i].basis[0]);
      line.insert(pts[j].basis[0]);
      std::vector<int> sum(4);
      for (int t = 0; t < 4; ++t) sum[static_cast<std::size_t>(t)] =
          pts[i].basis[0][static_cast<std::size_t>(t)] ^ pts[j].basis[0][static_cast<std::size_t>(t)];
      line.insert(sum);
      lines.insert(std::move(line));
    }
  CHECK(lines.size() == 35);
}

TEST_CASE("pg configurations") {
  FieldTable f2(2, 1);
  IncidenceStructure fano_pg = pg_configuration(2, 0, 1, f2);
  TacticalReport rep = validate_tactical(fano_pg);
  CHECK(rep.params.v == 7);
  CHECK(rep.params.k == 3);
  CHECK(rep.params.r == 3);

  IncidenceStructure pg3 = pg_configuration(3, 0, 1, f2);
  TacticalReport r3 = validate_tactical(pg3);
  CHECK(r3.params.v == 15);
  CHECK(r3.params.k == 7);
  CHECK(r3.params.b == 35);
  CHECK(r3.params.r == 3);
  DesignReport d3 = design_lambda(pg3);
  REQUIRE(d3.is_design);
  CHECK(*d3.lambda == 1);

  FieldTable f3(3, 1);
  IncidenceStructure pg13 = pg_configuration(2, 0, 1, f3);
  TacticalReport r13 = validate_tactical(pg13);
  CHECK(r13.params.v == 13);
  CHECK(r13.params.k == 4);
  CHECK(r13.params.b == 13);
  DesignReport d13 = design_lambda(pg13);
  REQUIRE(d13.is_design);
  CHECK(*d13.lambda == 1);

  CHECK_THROWS_AS(pg_configuration(2, 1, 1, f2), Error);
}

TEST_CASE("pg duality") {
  FieldTable f2(2, 1);
  FieldTable f3(3, 1);
  CHECK(check_pg_duality(2, 0, 1, f2));
  CHECK(check_pg_duality(3, 0, 1, f2));
  CHECK(check_pg_duality(3, 1, 2, f2));
  CHECK(check_pg_duality(3, 0, 2, f2));  // self-paired: s = n-r-1
  CHECK(check_pg_duality(2, 0, 1, f3));
}

TEST_CASE("projective point lists and frobenius") {
  FieldTable f4(2, 2);
  auto pts = projective_points(2, f4);
  CHECK(pts.size() == 21);
  // omega = 2 (polynomial x), omega^2 = omega + 1 = 3 under x^2+x+1
  std::vector<int> p{1, 2, 0};
  std::vector<int> img = frobenius_power(p, 1, f4);
  CHECK(img == std::vector<int>{1, 3, 0});
  int fixed = 0;
  for (const auto& pt : pts) {
    if (frobenius_power(pt, 1, f4) == pt) ++fixed;
    CHECK(frobenius_power(pt, 2, f4) == pt);
  }
  CHECK(fixed == 7);
}

TEST_CASE("mukai incidence") {
  FieldTable f4(2, 2);
  IncidenceStructure m2 = mukai_incidence(2, f4);
  TacticalReport rep = validate_tactical(m2);
  CHECK(rep.params.v == 21);
  CHECK(rep.params.k == 5);
  CHECK(rep.params.b == 21);
  CHECK(rep.params.r == 5);
  // the defining relation is symmetric: the identity map is a switch
  for (int i = 0; i < 21; ++i)
    for (int j = 0; j < 21; ++j) CHECK(m2.inc.get(i, j) == m2.inc.get(j, i));
  CHECK(is_isomorphic(m2, pg_configuration(2, 0, 1, f4)));

  // frobenius acts as a configuration automorphism
  auto pts = projective_points(2, f4);
  std::vector<int> fmap(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto img = frobenius_power(pts[i], 1, f4);
    fmap[i] = static_cast<int>(std::find(pts.begin(), pts.end(), img) - pts.begin());
  }
  for (int i = 0; i < 21; ++i)
    for (int j = 0; j < 21; ++j)
      CHECK(m2.inc.get(i, j) ==
            m2.inc.get(fmap[static_cast<std::size_t>(i)], fmap[static_cast<std::size_t>(j)]));
}

TEST_CASE("mukai q=3 parameters") {
  FieldTable f9(3, 2);
  IncidenceStructure m3 = mukai_incidence(3, f9);
  TacticalReport rep = validate_tactical(m3);
  CHECK(rep.params.v == 91);
  CHECK(rep.params.k == 10);
  CHECK(rep.params.r == 10);
}
