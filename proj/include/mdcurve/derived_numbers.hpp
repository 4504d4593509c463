#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "mdcurve/curve.hpp"

namespace mdcurve {

/// Geometric scales t_j = t0 * ratio^j, j = 0..steps-1.
struct Ladder {
    double t0 = 1e-2;
    double ratio = 0.5;
    int steps = 20;

    /// t0 = 1e-2 (b - a), ratio 1/2, 20 steps.
    static Ladder defaults_for(const Curve& curve);
    /// Throws std::invalid_argument unless t0 > 0, 0 < ratio < 1, steps >= 4.
    void validate() const;
    std::vector<double> scales() const;
    double finest() const;
};

/// A derived number: a nonnegative real or +infinity.
struct DerivedNumber {
    double value = 0.0;
    bool infinite = false;
};

/// One side of the ladder: ratios ||f(x ± t) - f(x)|| / t at the scales that fit
/// inside the domain.
struct SideRatios {
    bool available = false;
    std::vector<double> scales;
    std::vector<double> ratios;
    DerivedNumber upper;
    DerivedNumber lower;
    double cauchy = 0.0;  // max |r_j - r_{j-1}| over the finest increments
};

struct DerivedNumberEstimate {
    double x = 0.0;
    SideRatios plus;
    SideRatios minus;

    const DerivedNumber& mD_plus_upper() const { return plus.upper; }
    const DerivedNumber& mD_plus_lower() const { return plus.lower; }
    const DerivedNumber& mD_minus_upper() const { return minus.upper; }
    const DerivedNumber& mD_minus_lower() const { return minus.lower; }
};

/// Ratios above this and still growing at the finest scales are flagged infinite.
inline constexpr double kInfiniteRatio = 1e6;

/// Throws std::invalid_argument for a bad ladder or x outside the domain, and
/// std::domain_error when the finest scale is below the parameter resolution
/// at x.
DerivedNumberEstimate derived_numbers(const Curve& curve, double x, const Ladder& ladder);

struct MetricDerivativeResult {
    bool exists = false;
    double value = 0.0;
    double spread = 0.0;
    double cauchy = 0.0;
    DerivedNumberEstimate estimate;
};

/// md exists when the per-scale ratios settle (finest Cauchy increment <= tol
/// on each available side) and the spread of the available upper/lower
/// estimates is <= max(tol, 3 * Cauchy). The reported value averages the
/// finest-scale ratios of the available sides.
MetricDerivativeResult metric_derivative_detail(const Curve& curve, double x, const Ladder& ladder, double tol);

std::optional<double> metric_derivative(const Curve& curve, double x, const Ladder& ladder, double tol = 1e-2);

void to_json(nlohmann::json& j, const DerivedNumber& d);
void to_json(nlohmann::json& j, const DerivedNumberEstimate& e);

}  // namespace mdcurve
