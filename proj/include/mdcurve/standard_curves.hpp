#pragma once

#include <cstdint>
#include <vector>

#include "mdcurve/curve.hpp"

namespace mdcurve::curves {

/// t -> (speed * t, 0) on [a, b].
Curve segment(double a = 0.0, double b = 1.0, double speed = 1.0);

/// t -> (|t|, 0) on [a, b].
Curve abs_curve(double a = -1.0, double b = 1.0);

/// t -> (t, t^2 / 2) on [a, b].
Curve parabola(double a = 0.0, double b = 1.0);

/// t -> (t^2, 0) on [a, b].
Curve square(double a = -1.0, double b = 1.0);

/// t -> (min(t, 0.25) + max(t - 0.5, 0), 0) on [0, 1]; constant on [0.25, 0.5].
Curve plateau();

/// (0,0) for t < 0, (1,0) for t >= 0, on [a, b].
Curve step(double a = -1.0, double b = 1.0);

/// (cos t, sin t) on [a, b].
Curve circle(double a = 0.0, double b = 6.283185307179586);

/// Constant curve at the origin on [a, b].
Curve constant(double a = 0.0, double b = 1.0);

/// t -> (|t| (2 + sin ln|t|), 0), with value 0 at t = 0.
Curve log_oscillation(double a = -1.0, double b = 1.0);

/// Real piecewise-linear function embedded as (F(t), 0): F(knots[0]) = 0 and
/// slope slopes[i] on [knots[i], knots[i+1]].
Curve piecewise_linear(std::vector<double> knots, std::vector<double> slopes);

/// Planar curve on [0, 1] made of `pieces` quadratic arcs joined continuously
/// with velocity jumps at the joints. Deterministic in `seed`.
Curve random_piecewise_smooth(std::uint64_t seed, int pieces = 8);

}  // namespace mdcurve::curves
