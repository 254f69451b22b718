#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uqfm/json_io.hpp"

namespace uqfm {

/// Result of one named verification suite. Every check is exact; a suite
/// passes iff no failure was recorded.
struct SuiteReport {
    std::string suite;
    Json params = Json::object();
    int checks_run = 0;
    std::vector<std::string> failures;
    std::uint64_t seed = 0;

    bool ok() const { return failures.empty(); }
    Json to_json() const;
};

// One suite per acceptance criterion, in order. m_filter = 0 runs the
// suite's full m range; a nonzero value restricts to that m where the
// suite iterates over it.
SuiteReport suite_rewriting(std::uint64_t seed, int m_filter = 0);    // relations + associativity
SuiteReport suite_theta(std::uint64_t seed, int m_filter = 0);        // intertwining + closed forms
SuiteReport suite_center(std::uint64_t seed, int m_filter = 0);       // Casimir forms + membership
SuiteReport suite_classify(std::uint64_t seed, int m_filter = 0);     // classification + construction
SuiteReport suite_hopf(std::uint64_t seed, int m_filter = 0);         // coproduct certification
SuiteReport suite_reducibility(std::uint64_t seed);                   // tensor decomposition (m = 1)
SuiteReport suite_pullback(std::uint64_t seed);                       // pi_w and epsilon_w laws (m = 1)
SuiteReport suite_whittaker(std::uint64_t seed, int m_filter = 0);    // Whittaker model checks

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, std::uint64_t seed, int m_filter = 0);

} // namespace uqfm
