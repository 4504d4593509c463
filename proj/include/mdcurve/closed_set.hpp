#pragma once

#include <vector>

#include <json.hpp>

#include "mdcurve/curve.hpp"

namespace mdcurve {

/// A closed subset of the line given as finitely many points and closed
/// intervals. Estimators that certify gaps treat the representation as a
/// cover of the true set, so anything outside it is genuinely outside.
struct ClosedSet {
    std::vector<double> points;
    std::vector<Interval> intervals;

    bool contains(double x, double tol = 0.0) const;
    bool has_interior() const;
    /// Distance from x to the set (infinity when the set is empty).
    double distance_to(double x) const;
    bool empty() const { return points.empty() && intervals.empty(); }
};

/// The 2^depth closed intervals of the middle-thirds construction on `base`.
std::vector<Interval> middle_thirds_intervals(int depth, Interval base = {0.0, 1.0});

/// Endpoints of the depth-`depth` middle-thirds intervals: a finite closed
/// subset of the Cantor set.
ClosedSet middle_thirds_endpoints(int depth, Interval base = {0.0, 1.0});

void to_json(nlohmann::json& j, const ClosedSet& m);
void from_json(const nlohmann::json& j, ClosedSet& m);

}  // namespace mdcurve
