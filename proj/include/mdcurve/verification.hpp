#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace mdcurve {

/// One check: pass iff the comparison `measured <op> threshold` holds.
struct CheckResult {
    std::string id;
    std::string anchor;  // the statement the check exercises
    double measured = 0.0;
    double threshold = 0.0;
    std::string comparison;  // "<=", ">=", "==" (within detail tolerance) or "ok"
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckResult> checks;
    double wall_time = 0.0;  // seconds; emitted only on request

    bool pass() const;
    void at_most(std::string id, std::string anchor, double measured, double threshold, std::string detail = {});
    void at_least(std::string id, std::string anchor, double measured, double threshold, std::string detail = {});
    void above(std::string id, std::string anchor, double measured, double threshold, std::string detail = {});
    /// A check without a numeric comparison (a build step, a structural property).
    void flag(std::string id, std::string anchor, bool ok, std::string detail = {});
};

struct SuiteOptions {
    std::uint64_t seed = 0;
    int depth = 0;                        // 0: suite default
    std::optional<nlohmann::json> spec;   // curve-spec overrides for the suite's builder
};

std::vector<std::string> suite_names();

/// Runs a suite by name; throws std::invalid_argument for an unknown suite.
/// Builder errors inside a suite become failed checks.
VerificationReport run_suite(const std::string& name, const SuiteOptions& options = {});

/// Sorted keys; NaN/inf measurements are written as strings.
nlohmann::json report_json(const VerificationReport& r, bool include_wall_time = false);

}  // namespace mdcurve
