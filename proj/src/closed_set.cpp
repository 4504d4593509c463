#include "mdcurve/closed_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mdcurve {

bool ClosedSet::contains(double x, double tol) const
{
    for (double p : points)
        if (std::abs(x - p) <= tol) return true;
    for (const Interval& iv : intervals)
        if (iv.lo - tol <= x && x <= iv.hi + tol) return true;
    return false;
}

bool ClosedSet::has_interior() const
{
    return std::any_of(intervals.begin(), intervals.end(), [](const Interval& iv) { return iv.hi > iv.lo; });
}

double ClosedSet::distance_to(double x) const
{
    double d = std::numeric_limits<double>::infinity();
    for (double p : points) d = std::min(d, std::abs(x - p));
    for (const Interval& iv : intervals) {
        if (x < iv.lo) d = std::min(d, iv.lo - x);
        else if (x > iv.hi) d = std::min(d, x - iv.hi);
        else return 0.0;
    }
    return d;
}

std::vector<Interval> middle_thirds_intervals(int depth, Interval base)
{
    if (depth < 0 || depth > 24) throw std::invalid_argument("middle-thirds depth must lie in [0, 24]");
    std::vector<Interval> level{base};
    for (int d = 0; d < depth; ++d) {
        std::vector<Interval> next;
        next.reserve(level.size() * 2);
        for (const Interval& iv : level) {
            const double w = iv.length() / 3.0;
            next.push_back({iv.lo, iv.lo + w});
            next.push_back({iv.hi - w, iv.hi});
        }
        level = std::move(next);
    }
    return level;
}

ClosedSet middle_thirds_endpoints(int depth, Interval base)
{
    ClosedSet m;
    for (const Interval& iv : middle_thirds_intervals(depth, base)) {
        m.points.push_back(iv.lo);
        m.points.push_back(iv.hi);
    }
    return m;
}

void to_json(nlohmann::json& j, const ClosedSet& m)
{
    nlohmann::json ivs = nlohmann::json::array();
    for (const Interval& iv : m.intervals) ivs.push_back({iv.lo, iv.hi});
    j = nlohmann::json{{"points", m.points}, {"intervals", ivs}};
}

void from_json(const nlohmann::json& j, ClosedSet& m)
{
    m = ClosedSet{};
    if (j.contains("points")) m.points = j.at("points").get<std::vector<double>>();
    if (j.contains("intervals")) {
        for (const auto& iv : j.at("intervals")) {
            const double lo = iv.at(0).get<double>(), hi = iv.at(1).get<double>();
            if (lo > hi) throw std::invalid_argument("closed set interval with lo > hi");
            m.intervals.push_back({lo, hi});
        }
    }
}

}  // namespace mdcurve
