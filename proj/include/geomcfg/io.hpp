#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "geomcfg/design.hpp"
#include "geomcfg/incidence.hpp"

namespace geomcfg {

using nlohmann::json;

/// Canonical interchange form: blocks as ascending point-index lists.
inline json to_json(const IncidenceStructure& s) {
  json out;
  out["v"] = s.v;
  out["b"] = s.b;
  json blocks = json::array();
  for (int j = 0; j < s.b; ++j) blocks.push_back(s.block_points(j));
  out["blocks"] = std::move(blocks);
  if (!s.point_labels.empty()) out["point_labels"] = s.point_labels;
  if (!s.block_labels.empty()) out["block_labels"] = s.block_labels;
  return out;
}

inline IncidenceStructure structure_from_json(const json& j) {
  require(j.contains("v") && j.contains("b") && j.contains("blocks"), "ParseError",
          "interchange JSON needs v, b, blocks");
  int v = j.at("v").get<int>();
  int b = j.at("b").get<int>();
  auto blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
  require(static_cast<int>(blocks.size()) == b, "ParseError", "block count disagrees with b");
  IncidenceStructure s = IncidenceStructure::from_blocks(v, blocks);
  if (j.contains("point_labels")) s.point_labels = j.at("point_labels").get<std::vector<std::string>>();
  if (j.contains("block_labels")) s.block_labels = j.at("block_labels").get<std::vector<std::string>>();
  return s;
}

inline std::string to_csv(const IncidenceStructure& s) {
  std::ostringstream out;
  for (int x = 0; x < s.v; ++x) {
    for (int j = 0; j < s.b; ++j) {
      if (j) out << ',';
      out << (s.inc.get(x, j) ? 1 : 0);
    }
    out << '\n';
  }
  return out.str();
}

inline IncidenceStructure structure_from_csv(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<int> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stoi(cell));
    rows.push_back(std::move(row));
  }
  require(!rows.empty(), "ParseError", "empty CSV");
  int v = static_cast<int>(rows.size());
  int b = static_cast<int>(rows[0].size());
  IncidenceStructure s(v, b);
  for (int x = 0; x < v; ++x) {
    require(static_cast<int>(rows[static_cast<std::size_t>(x)].size()) == b, "ParseError",
            "ragged CSV");
    for (int j = 0; j < b; ++j)
      if (rows[static_cast<std::size_t>(x)][static_cast<std::size_t>(j)]) s.inc.set(x, j, true);
  }
  return s;
}

inline std::string sign_matrix_csv(const SignMatrix& m) {
  std::ostringstream out;
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) {
      if (j) out << ',';
      out << (m.at(i, j) > 0 ? "1" : "-1");
    }
    out << '\n';
  }
  return out.str();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), "IoError", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), "IoError", "cannot write " + path);
  out << content;
}

/// Exact integers for JSON consumers: plain numbers up to 2^53, decimal
/// strings beyond, so group orders never lose precision.
inline json exact_int(const BigInt& n) {
  static const BigInt cap = BigInt(1) << 53;
  if (n <= cap && n >= -cap) return json(static_cast<std::int64_t>(n));
  return json(n.str());
}

}  // namespace geomcfg
