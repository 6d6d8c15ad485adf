#include <catch2/catch_amalgamated.hpp>

#include "geomcfg/analyze.hpp"
#include "geomcfg/io.hpp"
#include "geomcfg/levi.hpp"
#include "geomcfg/registry.hpp"

using namespace geomcfg;

TEST_CASE("json round trip is lossless for the catalog") {
  for (const CatalogEntry& e : catalog_entries()) {
    INFO(e.name);
    IncidenceStructure s = e.build();
    json j = to_json(s);
    IncidenceStructure back = structure_from_json(j);
    CHECK(back == s);
    CHECK(to_json(back).dump() == j.dump());
  }
}

TEST_CASE("csv round trip") {
  IncidenceStructure s = fano();
  std::string csv = to_csv(s);
  CHECK(structure_from_csv(csv) == s);
}

TEST_CASE("labels survive json round trips") {
  IncidenceStructure cr = cremona_richmond();
  json j = to_json(cr);
  IncidenceStructure back = structure_from_json(j);
  CHECK(back.point_labels == cr.point_labels);
  CHECK(back.block_labels == cr.block_labels);
}

TEST_CASE("dot export shades points black and blocks white") {
  std::string dot = to_dot(fano());
  CHECK(dot.find("fillcolor=black") != std::string::npos);
  CHECK(dot.find("fillcolor=white") != std::string::npos);
  CHECK(dot.find("p0 -- b") != std::string::npos);
}

TEST_CASE("exact integers exceed-2^53 rule") {
  CHECK(exact_int(BigInt(336)).is_number_integer());
  BigInt big = BigInt("18446744073709551616");  // 2^64
  CHECK(exact_int(big).is_string());
  CHECK(exact_int(big).get<std::string>() == "18446744073709551616");
}

TEST_CASE("analyze report on fano") {
  AnalyzeReport rep = analyze(fano());
  CHECK(rep.params.v == 7);
  CHECK(rep.connected);
  CHECK(rep.lineal);
  REQUIRE(rep.design.is_design);
  CHECK(*rep.design.lambda == 1);
  REQUIRE(rep.bcr.has_value());
  CHECK(rep.bcr->pass);
  REQUIRE(rep.proper_order.has_value());
  CHECK(*rep.proper_order == 168);
  CHECK(*rep.full_order == 336);
  CHECK(rep.has_polarity.value());
  CHECK(rep.s_regularity_value.value() == 4);
  REQUIRE(rep.hadamard.has_value());
  CHECK_FALSE(*rep.hadamard);
  json j = report_to_json(rep);
  CHECK(j["schema"] == "geomcfg.analyze/1");
  CHECK(j["groups"]["full_order"] == 336);
  std::string text = report_to_text(rep);
  CHECK(text.find("proper order: 168") != std::string::npos);
}

TEST_CASE("analyze reports byte-stable across repeated runs and worker counts") {
  for (const char* name : {"fano", "kummer-2", "cremona-richmond", "five3"}) {
    const CatalogEntry* e = find_catalog_entry(name);
    REQUIRE(e != nullptr);
    IncidenceStructure s = e->build();
    AnalyzeOptions opt;
    std::string a = report_to_json(analyze(s, opt)).dump();
    std::string b = report_to_json(analyze(s, opt)).dump();
    CHECK(a == b);
    opt.workers = 3;
    std::string c = report_to_json(analyze(s, opt)).dump();
    CHECK(a == c);
  }
}
