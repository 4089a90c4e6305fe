#pragma once

#include "ntpack/algorithms.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace ntpack::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kBudgetExhausted = 2,
  kValidationFailure = 3,
};

/// Runs the ntpack command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// JSON record of one analysis. Every number is a string.
nlohmann::ordered_json analysis_record(const Ledger& ledger, const std::string& word, const AnalysisResult& r, int digits,
                               double elapsed_ms);
std::string render_analysis_text(const nlohmann::ordered_json& record);

/// "V1:1,2" or "V1:1/2,3".
PLPoint parse_point(const Ledger& ledger, const std::string& text);

}  // namespace ntpack::cli
