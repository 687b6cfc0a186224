#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "ghwlab/code_family.hpp"

namespace ghwlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMismatch = 3;
inline constexpr int kExitHypotheses = 4;
inline constexpr int kExitBudget = 5;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

// Runs one command line (without the program name). Nothing is written to `out`
// unless the command produces a complete record.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "7", "0,1", "1..47", or mixtures such as "1..3,8".
std::vector<std::int64_t> parse_int_list(const std::string& text);

nlohmann::json params_json(const CodeParams& params);
nlohmann::json hypotheses_json(const HypothesisReport& report);

// CSV header of the sweep subcommand.
const std::vector<std::string>& sweep_columns();

}  // namespace ghwlab::cli
