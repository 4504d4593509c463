#include "mdcurve/box_curve.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mdcurve {

Curve build_box_curve(double alpha)
{
    if (!(alpha > 0.0 && alpha < std::numbers::pi / 2)) throw std::invalid_argument("box curve: alpha must lie in (0, pi/2)");
    const double h = 0.5 * std::tan(alpha);
    return Curve({-1.0 - h, 2.0 + h}, NormSpec::l1_2d(),
                 [h](double t) -> Vector {
                     if (t < -h) return {t + h, -h};
                     if (t < 0.0) return {0.0, t};
                     if (t <= 1.0) return {t, 0.0};
                     if (t <= 1.0 + h) return {1.0, -(t - 1.0)};
                     return {t - h, -h};
                 },
                 {-h, 0.0, 1.0, 1.0 + h}, 1.0);
}

}  // namespace mdcurve
