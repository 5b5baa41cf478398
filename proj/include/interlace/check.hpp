#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace interlace {

// Cross-validation batteries: every identity the engine promises is run
// here as a counted pass/fail line. The CLI `check` command and the
// acceptance suite both drive these.
struct CheckConfig {
    uint64_t seed = 1;
    // Caps the corpus order where a suite draws random objects; 0 keeps
    // each identity's own default (the defaults are the acceptance
    // parameters).
    std::size_t max_n = 0;
    // Scales the number of random trials; 0 keeps the defaults.
    std::size_t trials = 0;
};

struct IdentityResult {
    std::string name;
    uint64_t pass = 0;
    uint64_t fail = 0;
};

struct SuiteResult {
    std::string suite;
    std::vector<IdentityResult> identities;

    bool ok() const;
    uint64_t failures() const;
};

SuiteResult check_interlace(const CheckConfig& cfg);
SuiteResult check_euler(const CheckConfig& cfg);
SuiteResult check_plane(const CheckConfig& cfg);
SuiteResult check_isotropic(const CheckConfig& cfg);
SuiteResult check_delta(const CheckConfig& cfg);

// which: one of interlace, euler, plane, isotropic, delta, all.
std::vector<SuiteResult> run_checks(const std::string& which, const CheckConfig& cfg);

// Deterministic plain-text report: byte-identical for identical configs.
void render_report(std::ostream& os, const std::vector<SuiteResult>& results);
std::string report_string(const std::vector<SuiteResult>& results);

}  // namespace interlace
