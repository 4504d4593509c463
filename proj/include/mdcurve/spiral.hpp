#pragma once

#include <array>
#include <vector>

#include <json.hpp>

#include "mdcurve/curve.hpp"

namespace mdcurve {

/// Arc-length parameterization of the logarithmic spiral r = a e^{b phi},
/// started at the origin: modulus t |b| / sqrt(b^2 + 1), argument ln(r/a)/b.
std::array<double, 2> spiral_arc(double a, double b, double t);

struct SpiralParams {
    double q = 0.0;
    double alpha = 0.0;
    double b = 0.0;
    double k = 0.0;      // b / sqrt(b^2 + 1)
    double beta = 0.0;   // atan(1/b)
    double s0 = 0.0;     // k^{-1} (e^{b alpha} - 1)
    double s1 = 0.0;     // k^{-1} e^{b alpha} (e^{b (alpha - beta)} - 1)
    double L = 0.0;      // s0 + s1
    double t_star = 0.0; // arg(g(1/2 + t_star) - g(1/2)) = -alpha
};

/// The four admissibility predicates for b (q, alpha fixed). `margin` puts a
/// relative cushion on each: k and the second-order bound must exceed
/// q + margin (1 - q), b must exceed (1 + margin) tan(alpha), and
/// b sin(alpha) must exceed (1 + margin) cos(alpha).
struct SpiralConstraints {
    bool k_exceeds_q = false;
    bool tangent_descends = false;
    bool second_bound = false;
    bool graph_condition = false;
    bool all() const { return k_exceeds_q && tangent_descends && second_bound && graph_condition; }
};
SpiralConstraints spiral_constraints(double q, double alpha, double b, double margin = 0.0);

/// Smallest multiple of grid_step satisfying all constraints with a 1% margin.
double choose_b(double q, double alpha, double grid_step = 0.01);

/// Derived constants for (q, alpha, b). Throws std::invalid_argument when b
/// violates a constraint (no margin) or q, alpha are out of range.
SpiralParams make_spiral_params(double q, double alpha, double b);
SpiralParams make_spiral_params(double q, double alpha);

/// The stitched spiral curve g on the whole line: horizontal [0,1], two
/// spiral arcs, a horizontal ray, and the mirror image for t < 0.
class SpiralCurve {
public:
    explicit SpiralCurve(SpiralParams params);

    const SpiralParams& params() const { return p_; }
    std::array<double, 2> point(double t) const;
    /// Restriction to [1/2 - H, 1/2 + H] with H = 1/2 + L + extra, as a Curve.
    Curve curve(double extra = 1.0) const;
    /// Parameters where the pieces meet.
    std::vector<double> joints() const;

private:
    std::array<double, 2> right(double t) const;
    SpiralParams p_;
};

/// Graph function F_{q,alpha} of the spiral curve: g traced as x -> (x, F(x)).
/// F = 0 on [0,1], F(x) = F(1 - x), constant beyond the end of the second arc.
class SpiralGraph {
public:
    explicit SpiralGraph(const SpiralParams& params);

    double operator()(double x) const;
    double x_first_end() const { return x_a_; }   // end of the first arc
    double x_flat() const { return x_b_; }        // F is constant for x >= x_flat
    double y_flat() const { return y_b_; }        // the constant value there (negative)
    double graph_length() const { return 1.0 + 2.0 * p_.L; }  // over [1 - x_flat, x_flat]

private:
    double right(double x) const;
    SpiralParams p_;
    double x_a_ = 0.0, x_b_ = 0.0, y_b_ = 0.0;
};

struct RatioBoundReport {
    double max_ratio = 0.0;   // max of t / |f(t) - f(0)|
    double argmax = 0.0;
    double bound = 0.0;       // k^{-1}
    bool pass = false;
};

/// t / |f(t) - f(0)| <= k^{-1} on a dense grid of t in (0, t_max].
RatioBoundReport spiral_ratio_bound_check(const SpiralParams& params, double t_max = 0.0, int samples = 20000);

void to_json(nlohmann::json& j, const SpiralParams& p);

}  // namespace mdcurve
