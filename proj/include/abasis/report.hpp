#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "abasis/eps.hpp"

// Machine-readable reports shared by the command line tool and the tests.
// Every report is an ordered key/value tree whose "verdict" is "PASS" or "FAIL".
namespace abasis::report {

using Json = nlohmann::ordered_json;

struct AnalyzeOptions {
  std::optional<int> h_max;
  bool at_most = false;  // also report the order for "at most h summands"
};

Json analyze(const EPS& s, const AnalyzeOptions& options = {});
Json sweep(int n_max, int precision_bits, bool with_rows);
Json verify_mr(Int n_lo, Int n_hi);
Json oracle_check(std::uint64_t seed, int iterations);

bool passed(const Json& report);

/// Indented "key: value" rendering; arrays of objects become one line per element.
std::string render_text(const Json& report);

}  // namespace abasis::report
