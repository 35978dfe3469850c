// SPDX-License-Identifier: Apache-2.0
#ifndef QINV_CLI_CORE_HPP
#define QINV_CLI_CORE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "qinv/motive.hpp"

namespace qinv {

/// Exit codes: 0 decided output (Equal or NotEqual), 2 Inconclusive,
/// 1 input error, 3 reproducibility-suite failures.
struct RunResult {
    int exit_code = 0;
    nlohmann::ordered_json report;
    std::string rendered;  // table output when requested, else pretty JSON
};

RunResult run(const std::vector<std::string>& args);

/// One check of the bundled worked-example suite.
struct GoldenCheck {
    std::string id;
    std::string claim;
    bool pass = false;
    std::string details;
};

std::vector<GoldenCheck> golden_checks();

nlohmann::ordered_json invariant_record(const QuadraticForm& q);
nlohmann::ordered_json decision_json(const Decision& d);

}  // namespace qinv

#endif
