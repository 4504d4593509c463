#pragma once

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "mdcurve/curve.hpp"

namespace mdcurve {

struct VariationResult {
    double value = 0.0;        // monotone lower bound for the variation
    double error_bound = 0.0;  // last refinement increment (+ L*mesh when L is known)
    int depth = 0;
    bool converged = true;
};

/// Chord sums over one refined partition, accumulated from its left end.
///
/// The partition consists of the required nodes, the curve breakpoints
/// between them, the dyadic grid of [required.front(), required.back()] at
/// `depth`, and every gap between consecutive required nodes/breakpoints cut
/// into 2^min(depth, 8) equal pieces. Partitions at successive depths are
/// nested, so the chord sums are monotone in depth.
struct CumulativeVariation {
    std::vector<double> nodes;            // full partition, increasing
    std::vector<double> cumulative;       // chord sum from nodes.front() to nodes[i]
    std::vector<std::size_t> required_at; // index into `nodes` of each required node
    std::vector<double> required;         // sorted, deduplicated required nodes
    double increment = 0.0;               // V_depth - V_{depth-1} over the whole span
    double previous_increment = 0.0;      // V_{depth-1} - V_{depth-2}
    double mesh = 0.0;
    double error_bound = 0.0;
    int depth = 0;
    bool converged = true;

    double total() const { return cumulative.empty() ? 0.0 : cumulative.back(); }
    /// Chord sum from required.front() to required[i].
    double at_required(std::size_t i) const { return cumulative[required_at[i]]; }
    /// Piecewise-linear interpolation of the cumulative sum at parameter t.
    double interpolate(double t) const;
    /// Smallest t with interpolate(t) == s (binary search, then linear interpolation).
    double inverse(double s) const;
};

CumulativeVariation cumulative_variation(const Curve& curve, std::vector<double> required, int depth);

/// Variation of the curve over [s, t]. Throws std::invalid_argument if s > t
/// or if either end lies outside the domain.
VariationResult variation(const Curve& curve, double s, double t, int depth = 12);

struct VariationProfile {
    std::vector<double> grid;
    std::vector<double> values;
    int refinement_depth = 0;
    double error_bound = 0.0;
    bool converged = true;
};

/// v_f on a uniform grid of `grid_size` points over the domain.
VariationProfile variation_profile(const Curve& curve, int grid_size, int depth);

void to_json(nlohmann::json& j, const VariationProfile& p);

}  // namespace mdcurve
