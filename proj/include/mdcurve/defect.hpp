#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mdcurve/curve.hpp"

namespace mdcurve {

enum class PairMode { all, same_side };

struct DefectEstimate {
    double window = 0.0;  // requested half-width
    bool clipped = false; // window reached past the domain and was cut
    double defect = 0.0;
    double md_used = 0.0;
    double witness_y = 0.0;
    double witness_z = 0.0;
    std::size_t pairs = 0;
};

/// max over sampled pairs y, z in [x - window, x + window] of
/// | ||f(y) - f(z)|| - md_value |y - z| | / (|y - x| + |z - x|).
/// Pairs come from a (2 * pair_samples + 1)^2 lattice plus the symmetric
/// pairs (x - t, x + t) for t = window / 2^k.
DefectEstimate md_defect(const Curve& curve, double x, double window, int pair_samples, double md_value,
                         PairMode mode = PairMode::all);

struct RegularityProfile {
    bool bilateral = false;
    std::vector<double> y;
    std::vector<double> z;
    std::vector<double> chord;
    std::vector<double> variation;
    std::vector<double> ratio;
    double min_ratio = 1.0;
    std::size_t argmin = 0;
};

/// Chord-to-variation ratios near x.
///
/// Unilateral: pairs (x, x + t) and (x - t, x) for t = window / 2^k, k < 12.
/// Bilateral: pairs y <= x <= z from a lattice of 9 offsets per side in
/// (0, window] plus the symmetric pairs (x - t, x + t).
/// Throws std::domain_error when the variation over some pair vanishes.
RegularityProfile regularity_ratio(const Curve& curve, double x, double window, int depth, bool bilateral);

/// ||f(z) - f(y)|| / V(f, [y, z]) for explicit pairs, sharing one partition.
RegularityProfile chord_arc_ratios(const Curve& curve, const std::vector<std::pair<double, double>>& pairs,
                                   int depth);

void to_json(nlohmann::json& j, const DefectEstimate& d);

}  // namespace mdcurve
