#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mdcurve/derived_numbers.hpp"

namespace mdcurve {

enum class ScanPredicate { unilateral_mismatch, angular, upper_mismatch, lower_mismatch, md_exists_not_mdiff };

ScanPredicate parse_scan_predicate(const std::string& name);
std::string to_string(ScanPredicate p);

struct ScanOptions {
    double tol = 1e-2;
    double defect_threshold = 0.1;  // md_exists_not_mdiff: defect must exceed this
    double defect_window = 0.0;     // 0 means ladder.t0
    int pair_samples = 16;
};

struct FlaggedPoint {
    double x = 0.0;
    double margin = 0.0;  // may be +infinity
    std::string detail;
};

/// Grid points where the predicate holds with margin > 0 (margins already
/// have the tolerance subtracted). One-sided predicates skip points where a
/// side is unavailable.
std::vector<FlaggedPoint> scan_exceptional_points(const Curve& curve, const std::vector<double>& grid,
                                                  const Ladder& ladder, ScanPredicate predicate,
                                                  const ScanOptions& options = {});

void to_json(nlohmann::json& j, const FlaggedPoint& f);

}  // namespace mdcurve
