// Command-line front end: builders, analysis, isomorphism tests, census,
// realization and exports over the JSON interchange format. Composition is
// through files or standard streams; every run is deterministic given its
// flags.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "geomcfg/analyze.hpp"
#include "geomcfg/catalog.hpp"
#include "geomcfg/census.hpp"
#include "geomcfg/design.hpp"
#include "geomcfg/gf.hpp"
#include "geomcfg/io.hpp"
#include "geomcfg/levi.hpp"
#include "geomcfg/registry.hpp"
#include "geomcfg/symplectic.hpp"

namespace {

using namespace geomcfg;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  return read_file(path);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-")
    std::cout << text;
  else
    write_file(out_path, text);
}

IncidenceStructure load_structure(const std::string& path) {
  std::string text = read_input(path);
  return structure_from_json(json::parse(text));
}

// q = p^k with p prime, or {0,0}
std::pair<int, int> prime_power(int q) {
  for (int cand = 2; cand <= q; ++cand) {
    bool prime = true;
    for (int d = 2; d * d <= cand; ++d)
      if (cand % d == 0) prime = false;
    if (!prime) continue;
    int e = 0, acc = 1;
    while (acc < q) {
      acc *= cand;
      ++e;
    }
    if (acc == q) return {cand, e};
  }
  return {0, 0};
}

json realization_json(const RationalPointSet& pts, const IntMat& hyperplanes) {
  json out;
  out["ambient_dimension"] = pts.n;
  json parr = json::array();
  for (const IntVec& p : pts.points) {
    json pj = json::array();
    for (const BigInt& c : p) pj.push_back(exact_int(c));
    parr.push_back(std::move(pj));
  }
  out["points"] = std::move(parr);
  if (!hyperplanes.empty()) {
    json harr = json::array();
    for (const IntVec& h : hyperplanes) {
      json hj = json::array();
      for (const BigInt& c : h) hj.push_back(exact_int(c));
      harr.push_back(std::move(hj));
    }
    out["hyperplanes"] = std::move(harr);
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"finite incidence configurations: builders, analysis, census"};
  app.require_subcommand(1);
  int workers = 1;
  long long seed = 0;
  app.add_option("--workers", workers, "worker threads for search operations (results identical for all N)");
  app.add_option("--seed", seed, "reserved; scheduling here is already deterministic");

  // ---- build
  auto* build = app.add_subcommand("build", "construct a named configuration");
  std::string build_name, build_out;
  int opt_n = -1, opt_g = -1, opt_v = -1, opt_q = -1, opt_r = -1, opt_s = -1;
  bool opt_realize = false, opt_allow_g4 = false;
  build->add_option("name", build_name, "builder name (see `catalog`)")->required();
  build->add_option("--n", opt_n, "order parameter (ceva, modular, pg ambient dim)");
  build->add_option("--g", opt_g, "genus parameter (kummer)");
  build->add_option("--v", opt_v, "point count (complete)");
  build->add_option("--q", opt_q, "field size (pg, mukai)");
  build->add_option("--r", opt_r, "point subspace dimension (pg)");
  build->add_option("--s", opt_s, "block subspace dimension (pg)");
  build->add_flag("--realize", opt_realize, "attach the exact coordinate realization (desargues, reye)");
  build->add_flag("--allow-g4", opt_allow_g4, "permit kummer --g 4 (symmetry checks are not run)");
  build->add_option("-o,--out", build_out, "output path (default stdout)");

  // ---- analyze
  auto* an = app.add_subcommand("analyze", "structured report for a configuration");
  std::string an_in, an_json_out;
  bool an_text = false, an_no_groups = false, an_no_sreg = false;
  an->add_option("--in", an_in, "input JSON (default stdin)");
  an->add_option("--json", an_json_out, "write the JSON report here (default stdout)");
  an->add_flag("--text", an_text, "append the human-readable report to stdout");
  an->add_flag("--no-groups", an_no_groups, "skip symmetry group computation");
  an->add_flag("--no-sreg", an_no_sreg, "skip s-arc regularity");

  // ---- iso
  auto* iso = app.add_subcommand("iso", "exit 0 iff the two configurations are isomorphic");
  std::string iso_a, iso_b;
  iso->add_option("a", iso_a)->required();
  iso->add_option("b", iso_b)->required();

  // ---- enumerate
  auto* en = app.add_subcommand("enumerate", "census of symmetric v_3 structures");
  int en_v = 0;
  bool en_lineal = false;
  long long en_budget = 0;
  std::string en_out;
  en->add_option("--v", en_v, "point count")->required();
  en->add_flag("--lineal", en_lineal, "restrict to line-point structures");
  en->add_option("--budget", en_budget, "node budget (required for v = 12 and larger)");
  en->add_option("-o,--out", en_out, "write the class representatives as a JSON array");

  // ---- realize
  auto* re = app.add_subcommand("realize", "generic point-hyperplane realization");
  std::string re_in, re_out;
  re->add_option("--input", re_in, "configuration JSON (default stdin)");
  re->add_option("-o,--out", re_out, "output path (default stdout)");

  // ---- export
  auto* ex = app.add_subcommand("export", "re-emit a configuration as dot, csv or json");
  std::string ex_in, ex_out, ex_format = "json";
  ex->add_option("--in", ex_in, "input JSON (default stdin)");
  ex->add_option("--format", ex_format, "dot | csv | json")->check(CLI::IsMember({"dot", "csv", "json"}));
  ex->add_option("-o,--out", ex_out, "output path (default stdout)");

  // ---- catalog
  auto* cat = app.add_subcommand("catalog", "list named builders with expected parameters");

  // ---- designcheck
  auto* dc = app.add_subcommand("designcheck", "design equations and Bruck-Chowla-Ryser");
  long long dc_v = 0, dc_k = 0, dc_lambda = 0;
  dc->add_option("--v", dc_v)->required();
  dc->add_option("--k", dc_k)->required();
  dc->add_option("--lambda", dc_lambda)->required();

  // ---- hadamard
  auto* ha = app.add_subcommand("hadamard", "construct and check Hadamard matrices");
  std::string ha_construct, ha_csv;
  bool ha_to_design = false;
  ha->add_option("--construct", ha_construct, "sylvester:k or paley:q")->required();
  ha->add_option("--csv", ha_csv, "write the sign matrix as CSV here");
  ha->add_flag("--to-design", ha_to_design, "emit the associated (4t-1)_{2t-1} design JSON");

  // ---- census (plane census)
  auto* ce = app.add_subcommand("census", "census reports");
  std::string ce_what;
  int ce_g = 2;
  ce->add_option("what", ce_what, "planes")->required();
  ce->add_option("--g", ce_g, "genus (only 2 is supported)");

  CLI11_PARSE(app, argc, argv);

  if (*build) {
    IncidenceStructure s;
    json extra;
    if (build_name == "ceva") {
      require(opt_n >= 2, "InvalidN", "ceva needs --n");
      s = ceva(opt_n);
    } else if (build_name == "modular") {
      require(opt_n >= 2, "NOutOfRange", "modular needs --n");
      s = modular_config(opt_n);
    } else if (build_name == "complete") {
      require(opt_v >= 2, "InvalidV", "complete needs --v");
      s = complete_configuration(opt_v);
    } else if (build_name == "kummer") {
      require(opt_g >= 1, "GenusOutOfRange", "kummer needs --g");
      s = kummer_configuration(opt_g, opt_allow_g4).structure;
    } else if (build_name == "pg") {
      require(opt_n >= 1 && opt_q >= 2, "InvalidDims", "pg needs --n --r --s --q");
      auto [base, k] = prime_power(opt_q);
      require(base != 0, "UnsupportedField", "q must be a prime power");
      FieldTable f(base, k);
      s = pg_configuration(opt_n, opt_r < 0 ? 0 : opt_r, opt_s < 0 ? 1 : opt_s, f);
    } else if (build_name == "mukai") {
      require(opt_q >= 2, "UnsupportedField", "mukai needs --q");
      auto [base, k] = prime_power(opt_q);
      require(base != 0, "UnsupportedField", "q must be a prime power");
      FieldTable f(base, 2 * k);
      s = mukai_incidence(opt_q, f);
    } else if (build_name == "desargues") {
      if (opt_realize) {
        DesarguesRealization r = desargues_realize();
        s = r.extracted;
        extra["realization"] = realization_json(r.points, {});
      } else {
        s = desargues();
      }
    } else if (build_name == "reye") {
      ReyeRealization r = reye();
      s = r.extracted;
      if (opt_realize) extra["realization"] = realization_json(r.points, {});
    } else if (const CatalogEntry* e = find_catalog_entry(build_name)) {
      s = e->build();
    } else {
      fail("UnknownBuilder", "no builder named '" + build_name + "'");
    }
    json out = to_json(s);
    for (auto& [key, val] : extra.items()) out[key] = val;
    emit(out.dump(2) + "\n", build_out);
    return 0;
  }

  if (*an) {
    IncidenceStructure s = load_structure(an_in);
    AnalyzeOptions opt;
    opt.groups = !an_no_groups;
    opt.s_reg = !an_no_sreg;
    opt.workers = workers;
    AnalyzeReport rep = analyze(s, opt);
    emit(report_to_json(rep).dump(2) + "\n", an_json_out);
    if (an_text) std::cout << report_to_text(rep);
    return 0;
  }

  if (*iso) {
    IncidenceStructure a = load_structure(iso_a);
    IncidenceStructure b = load_structure(iso_b);
    return is_isomorphic(a, b) ? 0 : 1;
  }

  if (*en) {
    require(en_v <= 11 || en_budget > 0, "BudgetExceeded",
            "v >= 12 runs only behind an explicit --budget");
    CensusResult res = enumerate_v3(en_v, en_lineal, en_budget > 0 ? en_budget : 400000000,
                                    !en_out.empty());
    json out;
    out["v"] = en_v;
    out["lineal"] = en_lineal;
    out["classes"] = res.class_count;
    out["nodes"] = res.nodes;
    std::cout << out.dump(2) << "\n";
    if (!en_out.empty()) {
      json arr = json::array();
      for (const auto& s : res.representatives) arr.push_back(to_json(s));
      write_file(en_out, arr.dump(2) + "\n");
    }
    return 0;
  }

  if (*re) {
    IncidenceStructure s = load_structure(re_in);
    PointHyperplaneRealization r = generic_point_hyperplane_realization(s, workers);
    json out = realization_json(r.points, r.hyperplanes);
    out["matches_input"] = r.matches_input;
    emit(out.dump(2) + "\n", re_out);
    return r.matches_input ? 0 : 1;
  }

  if (*ex) {
    IncidenceStructure s = load_structure(ex_in);
    if (ex_format == "dot")
      emit(to_dot(s), ex_out);
    else if (ex_format == "csv")
      emit(to_csv(s), ex_out);
    else
      emit(to_json(s).dump(2) + "\n", ex_out);
    return 0;
  }

  if (*cat) {
    std::cout << "parameterized builders: ceva --n | modular --n | complete --v | kummer --g |\n"
              << "                        pg --n --r --s --q | mukai --q | desargues [--realize] | reye\n";
    for (const CatalogEntry& e : catalog_entries())
      std::cout << e.name << "  (" << e.v << "_" << e.k << ", " << e.b << "_" << e.r << ")  "
                << e.summary << "\n";
    return 0;
  }

  if (*dc) {
    json out;
    bool symmetric_ok = dc_k * (dc_k - 1) == dc_lambda * (dc_v - 1);
    out["v"] = dc_v;
    out["k"] = dc_k;
    out["lambda"] = dc_lambda;
    out["symmetric_identity_holds"] = symmetric_ok;
    if (symmetric_ok) {
      BcrVerdict verdict = bruck_chowla_ryser(dc_v, dc_k, dc_lambda);
      out["bcr"] = {{"pass", verdict.pass}};
      if (!verdict.pass) out["bcr"]["reason"] = verdict.reason;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (*ha) {
    auto colon = ha_construct.find(':');
    require(colon != std::string::npos, "InvalidParams", "--construct takes sylvester:k or paley:q");
    std::string kind = ha_construct.substr(0, colon);
    int param = std::stoi(ha_construct.substr(colon + 1));
    SignMatrix m;
    if (kind == "sylvester")
      m = sylvester(param);
    else if (kind == "paley")
      m = paley(param);
    else
      fail("InvalidParams", "unknown construction '" + kind + "'");
    bool ok = hadamard_check(m);
    json out;
    out["order"] = m.n;
    out["hadamard"] = ok;
    if (!ha_csv.empty()) write_file(ha_csv, sign_matrix_csv(m));
    if (ha_to_design) {
      HadamardDesign d = hadamard_to_design(m);
      out["design"] = to_json(d.structure);
      out["t"] = d.t;
      out["lambda"] = d.lambda;
      out["degenerate"] = d.degenerate;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (*ce) {
    require(ce_what == "planes", "InvalidParams", "supported census: planes");
    require(ce_g == 2, "GenusOutOfRange", "plane census is defined for g = 2");
    PlaneCensus c = plane_census_g2();
    json out;
    out["total"] = c.total;
    out["isotropic"] = c.isotropic;
    out["nondegenerate"] = c.nondegenerate;
    out["degenerate_radical"] = c.degenerate_radical;
    out["triangle_pairs"] = c.triangle_pairs;
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const geomcfg::Error& e) {
    geomcfg::json err;
    err["error"] = {{"kind", e.kind()}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    geomcfg::json err;
    err["error"] = {{"kind", "Unexpected"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 2;
  }
}
