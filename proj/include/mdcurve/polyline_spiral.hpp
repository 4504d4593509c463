#pragma once

#include <array>
#include <vector>

#include <json.hpp>

#include "mdcurve/curve.hpp"

namespace mdcurve {

/// One half (t >= 0) of a polyline spiral: vertices at increasing parameters,
/// then a ray in `ray_direction` from the last vertex.
struct PolylineHalf {
    std::vector<double> t;
    std::vector<std::array<double, 2>> p;
    std::array<double, 2> ray_direction{1.0, 0.0};
    double min_ratio = 1.0;  // smallest sampled ratio against s in [0, 1]
    std::array<double, 2> at(double s) const;
};

/// Unit-speed polyline in a planar norm: the horizontal segment [0, 1],
/// segments of slope -eps, -2 eps, ... until the slope angle passes alpha and
/// the chord from g(1/2) points below -alpha, then slopes back to 0 and a
/// horizontal ray. For t < 0 the curve is the mirror image x -> g(1).x - x of
/// the same construction built for the reflected norm N(x, -y).
struct PolylineSpiral {
    NormSpec norm;
    double q = 0.0;
    double alpha = 0.0;
    double epsilon = 0.0;
    int segments = 0;     // doublings used across both halves and all sweeps
    double t_star = 0.0;  // arg(g(1/2 + t_star) - g(1/2)) = -alpha
    PolylineHalf right;
    PolylineHalf left;

    std::array<double, 2> point(double t) const;
    std::vector<double> vertices() const;
    /// Restriction to a domain symmetric about 1/2 covering every vertex plus one unit.
    Curve curve() const;
};

/// Throws std::invalid_argument for a non-planar or invalid norm or bad
/// (q, alpha), and std::runtime_error when no eps in the halving sweep
/// certifies ratio > q within `segment_budget` segment doublings.
PolylineSpiral build_polyline_spiral(const NormSpec& norm, double q, double alpha, int segment_budget = 10000);

/// Min of ||g(t) - g(s)|| / |t - s| over s in [0, 1] (`s_samples` points)
/// and the given t values.
double min_pair_ratio(const Curve& g, const std::vector<double>& ts, int s_samples = 129);

void to_json(nlohmann::json& j, const PolylineSpiral& s);

}  // namespace mdcurve
