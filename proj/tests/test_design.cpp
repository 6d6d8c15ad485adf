#include <catch2/catch_amalgamated.hpp>

#include "geomcfg/canon.hpp"
#include "geomcfg/design.hpp"
#include "geomcfg/registry.hpp"
#include "oracles.hpp"

using namespace geomcfg;

TEST_CASE("design lambda on the catalog") {
  DesignReport f = design_lambda(fano());
  REQUIRE(f.is_design);
  CHECK(*f.lambda == 1);
  REQUIRE(f.symmetric_dual_lambda_holds.has_value());
  CHECK(*f.symmetric_dual_lambda_holds);

  DesignReport k = design_lambda(kummer_configuration(2).structure);
  REQUIRE(k.is_design);
  CHECK(*k.lambda == 2);
  CHECK(*k.symmetric_dual_lambda_holds);

  DesignReport h = design_lambda(hesse_structure());
  REQUIRE(h.is_design);
  CHECK(*h.lambda == 1);

  DesignReport r = design_lambda(reye().extracted);
  CHECK_FALSE(r.is_design);

  // the complement of the 16_6 biplane is the symmetric 16_10 design; its
  // type follows from v - 2k + lambda
  DesignReport comp = design_lambda(complement_of(kummer_configuration(2).structure));
  REQUIRE(comp.is_design);
  CHECK(*comp.lambda == 6);
}

TEST_CASE("design equations") {
  CHECK(check_design_equations(7, 3, 7, 3, 1));
  CHECK(check_design_equations(16, 6, 16, 6, 2));
  CHECK(check_design_equations(9, 4, 12, 3, 1));
  CHECK_FALSE(check_design_equations(7, 3, 7, 3, 2));
  CHECK_FALSE(check_design_equations(8, 3, 7, 3, 1));
}

TEST_CASE("legendre solvability basics") {
  CHECK(legendre_solvable(2, -1, -1));   // (1,1,1)
  CHECK_FALSE(legendre_solvable(1, 1, 1));
  CHECK_FALSE(legendre_solvable(6, -1, -1));
  CHECK(legendre_solvable(1, 1, -2));
  CHECK(legendre_solvable(1, -1, 7));
}

TEST_CASE("legendre agrees with bounded exhaustive search on a spot grid") {
  // the full |a|,|b|,|c| <= 50 sweep runs in the acceptance suite
  for (long long a = -12; a <= 12; ++a)
    for (long long b = -12; b <= 12; ++b)
      for (long long c = -12; c <= 12; ++c) {
        if (a == 0 || b == 0 || c == 0) continue;
        INFO(a << " " << b << " " << c);
        CHECK(legendre_solvable(a, b, c) == oracles::holzer_search(a, b, c));
      }
}

TEST_CASE("bruck-chowla-ryser verdicts") {
  CHECK(bruck_chowla_ryser(7, 3, 1).pass);
  CHECK_FALSE(bruck_chowla_ryser(43, 7, 1).pass);
  CHECK_FALSE(bruck_chowla_ryser(22, 7, 2).pass);
  CHECK(bruck_chowla_ryser(11, 5, 2).pass);
  CHECK(bruck_chowla_ryser(4, 3, 2).pass);  // k - lambda = 1
  CHECK_THROWS_AS(bruck_chowla_ryser(10, 3, 1), Error);
}

TEST_CASE("sylvester and paley constructions are Hadamard") {
  CHECK(sylvester(0).n == 1);
  CHECK(hadamard_check(sylvester(0)));
  CHECK(hadamard_check(sylvester(2)));
  CHECK(hadamard_check(sylvester(3)));
  CHECK(hadamard_check(paley(3)));
  CHECK(hadamard_check(paley(7)));
  CHECK(hadamard_check(paley(11)));
  CHECK(paley(11).n == 12);
  SignMatrix ones(2);
  CHECK_FALSE(hadamard_check(ones));
  CHECK_THROWS_AS(paley(5), Error);
  CHECK_THROWS_AS(paley(9), Error);
}

TEST_CASE("hadamard to design") {
  HadamardDesign d8 = hadamard_to_design(sylvester(3));
  CHECK(d8.t == 2);
  CHECK(d8.lambda == 1);
  CHECK_FALSE(d8.degenerate);
  TacticalReport rep = validate_tactical(d8.structure);
  CHECK(rep.params.v == 7);
  CHECK(rep.params.k == 3);
  DesignReport dr = design_lambda(d8.structure);
  REQUIRE(dr.is_design);
  CHECK(*dr.lambda == 1);

  HadamardDesign d12 = hadamard_to_design(paley(11));
  CHECK(d12.t == 3);
  CHECK(d12.lambda == 2);
  DesignReport dr12 = design_lambda(d12.structure);
  REQUIRE(dr12.is_design);
  CHECK(*dr12.lambda == 2);
  CHECK(validate_tactical(d12.structure).params.v == 11);

  HadamardDesign d4 = hadamard_to_design(sylvester(2));
  CHECK(d4.t == 1);
  CHECK(d4.degenerate);
  CHECK(validate_tactical(d4.structure).params.k == 1);
}

TEST_CASE("bordered sign matrix recovers the design up to isomorphism") {
  for (auto& base : {hadamard_to_design(sylvester(3)).structure,
                     hadamard_to_design(paley(11)).structure}) {
    SignMatrix bordered = bordered_all_ones(design_to_sign_matrix(base));
    REQUIRE(hadamard_check(bordered));
    HadamardDesign back = hadamard_to_design(bordered);
    CHECK(is_isomorphic(back.structure, base));
  }
}

TEST_CASE("BCR passes for every symmetric design the catalog constructs") {
  for (const CatalogEntry& e : catalog_entries()) {
    IncidenceStructure s = e.build();
    if (s.v != s.b) continue;
    DesignReport rep = design_lambda(s);
    if (!rep.is_design) continue;
    INFO(e.name);
    CHECK(bruck_chowla_ryser(s.v, validate_tactical(s).params.k, *rep.lambda).pass);
  }
}

TEST_CASE("design to sign matrix") {
  SignMatrix mk = design_to_sign_matrix(kummer_configuration(2).structure);
  CHECK(mk.n == 16);
  CHECK(hadamard_check(mk));

  SignMatrix mf = design_to_sign_matrix(fano());
  CHECK(mf.n == 7);
  CHECK_FALSE(hadamard_check(mf));

  SignMatrix mk3 = design_to_sign_matrix(kummer_configuration(3).structure);
  CHECK(mk3.n == 64);
  CHECK(hadamard_check(mk3));

  CHECK_THROWS_AS(design_to_sign_matrix(ceva(4)), Error);
}
