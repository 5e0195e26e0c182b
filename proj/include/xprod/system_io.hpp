#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "xprod/crossed.hpp"
#include "xprod/norms.hpp"

namespace xprod {

struct AnalyzeOptions {
  std::vector<double> p_values{1.0, 2.0, kInfExponent};
  std::uint64_t seed = 0;
  int restarts = 32;
  bool dump_matrices = false;  // include regular matrices in the norms report
};

/// Parsed and cross-validated system bundle.
struct SystemSpec {
  SystemPtr sys;
  std::vector<std::pair<std::string, CrossedElement>> elements;
  std::vector<std::pair<std::string, Cocycle>> extra_cocycles;
  AnalyzeOptions options;
};

FiniteGroup parse_group(const nlohmann::json& j);
FiniteAction parse_action(const nlohmann::json& j, const FiniteGroup& g);
Cocycle parse_cocycle(const nlohmann::json& j, int group_order, int points);

SystemSpec parse_spec(const nlohmann::json& j);
SystemSpec load_spec(const std::string& path);

/// Exponent list: numbers plus the token "inf".
std::vector<double> parse_exponents(const std::string& csv);

nlohmann::ordered_json element_to_json(const CrossedElement& b);
nlohmann::ordered_json matrix_to_json(const Eigen::MatrixXcd& m);

/// {kind, dim, basis labels, entries [re,im]}.
nlohmann::ordered_json rep_matrix_to_json(const struct RepMatrix& rep);
/// Dense text table, one row per line.
std::string matrix_to_text(const Eigen::MatrixXcd& m);

}  // namespace xprod
