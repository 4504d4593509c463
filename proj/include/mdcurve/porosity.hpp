#pragma once

#include <vector>

#include <json.hpp>

#include "mdcurve/closed_set.hpp"
#include "mdcurve/derived_numbers.hpp"

namespace mdcurve {

/// B(z, r) (and, for symmetric records, B(2x - z, r)) lies in B(x, R) \ M.
struct GapRecord {
    double R = 0.0;
    double r = 0.0;
    double z = 0.0;
};

struct GapStructure {
    double x = 0.0;
    bool symmetric = true;
    std::vector<GapRecord> gaps;  // one per scale; r = 0 when no gap was found
    double bound = 0.0;           // 2 * max r / R
};

/// Lower bound for the symmetric upper porosity of M at x from the scales R.
/// M is read as a cover of the true set, so every certified gap is genuine.
/// Throws std::invalid_argument when x is not in M.
GapStructure symmetric_porosity_lower_bound(const ClosedSet& M, double x, const std::vector<double>& scales);
GapStructure symmetric_porosity_lower_bound(const ClosedSet& M, double x, const Ladder& scales);

/// Same machinery with a single ball (upper porosity).
GapStructure upper_porosity_lower_bound(const ClosedSet& M, double x, const std::vector<double>& scales);
GapStructure upper_porosity_lower_bound(const ClosedSet& M, double x, const Ladder& scales);

/// True when the open balls of the record avoid M and sit inside B(x, R).
bool certify_gap(const ClosedSet& M, double x, const GapRecord& g, bool symmetric);

void to_json(nlohmann::json& j, const GapStructure& g);

}  // namespace mdcurve
