#pragma once

#include "mdcurve/curve.hpp"

namespace mdcurve {

/// Unit-speed curve in the l1 plane made of horizontal and vertical pieces,
/// with h = tan(alpha) / 2:
///   (t + h) - h i   for t < -h,      t i            on [-h, 0],
///   t               on [0, 1],       1 - (t - 1) i  on [1, 1 + h],
///   (t - h) - h i   for t > 1 + h.
/// The domain is [-1 - h, 2 + h]. Throws std::invalid_argument unless
/// alpha lies in (0, pi/2).
Curve build_box_curve(double alpha);

}  // namespace mdcurve
