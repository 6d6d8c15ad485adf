#pragma once

#include <optional>
#include <sstream>
#include <string>

#include "geomcfg/canon.hpp"
#include "geomcfg/design.hpp"
#include "geomcfg/io.hpp"
#include "geomcfg/levi.hpp"

namespace geomcfg {

struct AnalyzeOptions {
  bool groups = true;       // proper/full orders, switch, polarity
  bool s_reg = true;        // s-arc regularity (needs groups)
  int workers = 1;
};

struct AnalyzeReport {
  ConfigParams params;
  bool points_distinct = true;
  bool blocks_distinct = true;
  bool connected = false;
  bool lineal = false;
  std::vector<int> s_class_sizes;
  DesignReport design;
  std::optional<BcrVerdict> bcr;       // for symmetric designs
  std::optional<bool> hadamard;        // sign matrix orthogonality, symmetric only
  std::optional<BigInt> proper_order;
  std::optional<BigInt> full_order;
  std::optional<bool> has_switch;
  std::optional<bool> has_polarity;
  std::optional<int> s_regularity_value;
  std::string s_regularity_note;  // set when the computation was skipped
  int girth_value = 0;
};

inline AnalyzeReport analyze(const IncidenceStructure& s, const AnalyzeOptions& opt = {}) {
  AnalyzeReport rep;
  TacticalReport tac = validate_tactical(s);
  rep.params = tac.params;
  rep.points_distinct = tac.points_distinct;
  rep.blocks_distinct = tac.blocks_distinct;
  rep.connected = is_connected(s);
  rep.lineal = is_lineal(s);
  rep.s_class_sizes = s_equivalence_classes(s).sizes;
  rep.design = design_lambda(s, opt.workers);
  rep.params.lambda = rep.design.lambda;
  rep.girth_value = girth(levi_graph(s));
  if (rep.design.is_design && rep.params.v == rep.params.b) {
    rep.bcr = bruck_chowla_ryser(rep.params.v, rep.params.k, *rep.design.lambda);
    rep.design.bcr_verdict = rep.bcr;
  }
  if (rep.params.v == rep.params.b) rep.hadamard = hadamard_check(design_to_sign_matrix(s));
  if (opt.groups) {
    AutomorphismGroup g = automorphism_group(s, true);
    rep.proper_order = g.proper_order;
    rep.full_order = g.full_order;
    rep.has_switch = g.has_switch;
    rep.has_polarity = g.has_polarity;
    if (opt.s_reg) {
      try {
        std::vector<Perm> gens = g.proper.generators();
        if (g.switch_perm) gens.push_back(*g.switch_perm);
        rep.s_regularity_value = s_regularity(s, gens);
      } catch (const Error& e) {
        rep.s_regularity_note = e.kind();
      }
    }
  }
  return rep;
}

inline json report_to_json(const AnalyzeReport& rep) {
  json out;
  out["schema"] = "geomcfg.analyze/1";
  out["params"] = {{"v", rep.params.v}, {"k", rep.params.k}, {"b", rep.params.b}, {"r", rep.params.r}};
  if (rep.params.lambda) out["params"]["lambda"] = *rep.params.lambda;
  out["points_distinct"] = rep.points_distinct;
  out["blocks_distinct"] = rep.blocks_distinct;
  out["connected"] = rep.connected;
  out["lineal"] = rep.lineal;
  out["s_classes"] = rep.s_class_sizes;
  out["girth"] = rep.girth_value;
  out["design"] = {{"is_design", rep.design.is_design}};
  if (rep.design.lambda) out["design"]["lambda"] = *rep.design.lambda;
  if (rep.design.symmetric_dual_lambda_holds)
    out["design"]["symmetric_dual_lambda_holds"] = *rep.design.symmetric_dual_lambda_holds;
  if (rep.bcr) {
    out["bcr"] = {{"pass", rep.bcr->pass}};
    if (!rep.bcr->pass) out["bcr"]["reason"] = rep.bcr->reason;
  }
  if (rep.hadamard) out["hadamard"] = *rep.hadamard;
  if (rep.proper_order) out["groups"]["proper_order"] = exact_int(*rep.proper_order);
  if (rep.full_order) out["groups"]["full_order"] = exact_int(*rep.full_order);
  if (rep.has_switch) out["groups"]["has_switch"] = *rep.has_switch;
  if (rep.has_polarity) out["groups"]["has_polarity"] = *rep.has_polarity;
  if (rep.s_regularity_value) out["s_regularity"] = *rep.s_regularity_value;
  if (!rep.s_regularity_note.empty()) out["s_regularity_note"] = rep.s_regularity_note;
  return out;
}

inline std::string report_to_text(const AnalyzeReport& rep) {
  std::ostringstream out;
  out << "params: (" << rep.params.v << "_" << rep.params.k << ", " << rep.params.b << "_"
      << rep.params.r << ")\n";
  out << "distinct: points=" << (rep.points_distinct ? "yes" : "no")
      << " blocks=" << (rep.blocks_distinct ? "yes" : "no") << "\n";
  out << "connected: " << (rep.connected ? "yes" : "no") << "\n";
  out << "lineal: " << (rep.lineal ? "yes" : "no") << "\n";
  out << "s-classes: {";
  for (std::size_t i = 0; i < rep.s_class_sizes.size(); ++i)
    out << (i ? "," : "") << rep.s_class_sizes[i];
  out << "}\n";
  out << "girth: " << rep.girth_value << "\n";
  if (rep.design.is_design) {
    out << "design: lambda=" << *rep.design.lambda;
    if (rep.design.symmetric_dual_lambda_holds)
      out << " (dual lambda " << (*rep.design.symmetric_dual_lambda_holds ? "holds" : "fails")
          << ")";
    out << "\n";
    if (rep.bcr) out << "bcr: " << (rep.bcr->pass ? "pass" : "fail (" + rep.bcr->reason + ")") << "\n";
  } else {
    out << "design: no\n";
  }
  if (rep.hadamard) out << "hadamard: " << (*rep.hadamard ? "yes" : "no") << "\n";
  if (rep.proper_order) out << "proper order: " << rep.proper_order->str() << "\n";
  if (rep.full_order) {
    out << "full order: " << rep.full_order->str();
    if (rep.has_switch) out << " (switch: " << (*rep.has_switch ? "yes" : "no") << ")";
    if (rep.has_polarity) out << " (polarity: " << (*rep.has_polarity ? "yes" : "no") << ")";
    out << "\n";
  }
  if (rep.s_regularity_value) out << "s-regularity: " << *rep.s_regularity_value << "\n";
  if (!rep.s_regularity_note.empty()) out << "s-regularity: skipped (" << rep.s_regularity_note << ")\n";
  return out.str();
}

}  // namespace geomcfg
