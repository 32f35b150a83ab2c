#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "zclass/circulant.hpp"
#include "zclass/classify.hpp"
#include "zclass/construct.hpp"
#include "zclass/geninv.hpp"
#include "zclass/lcp.hpp"
#include "zclass/matrix.hpp"

namespace zclass {

// {"rows": n, "cols": m, "data": [["p/q", ...], ...]}, entries in lowest terms.
nlohmann::json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const nlohmann::json& j);

// Comma-separated entries, one row per line, same entry grammar as JSON.
std::string matrix_to_csv(const RatMatrix& m);
RatMatrix matrix_from_csv(const std::string& text);

// Dispatches on the ".csv" suffix, JSON otherwise.
RatMatrix read_matrix_file(const std::string& path);

// Accepts a bare JSON array of entries or {"data": [...]}.
std::vector<Rat> vector_from_json(const nlohmann::json& j);
std::vector<Rat> read_vector_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

nlohmann::json vector_to_json(const std::vector<Rat>& v);
nlohmann::json report_to_json(const ClassReport& report);
nlohmann::json pseudo_inverse_to_json(const PseudoInverseResult& res);
nlohmann::json group_inverse_to_json(const GroupInverseResult& res, const RatMatrix& source);
nlohmann::json lcp_outcome_to_json(const LCPOutcome& outcome);
nlohmann::json lcp_props_to_json(const BoolWitness& r0, const BoolWitness& semimonotone,
                                 const Q0NecessaryWitness& q0);
nlohmann::json region_to_json(const CirculantPoint& pt, int trace_class,
                              const RegionVerdict& verdict);
nlohmann::json cross_check_to_json(const CrossCheckReport& report);
nlohmann::json border_to_json(const BorderResult& res);
nlohmann::json ostrowski_report_to_json(const OstrowskiProbeReport& report);
nlohmann::json fan_report_to_json(const FanProbeReport& report);

}  // namespace zclass
