#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mdcurve/closed_set.hpp"
#include "mdcurve/curve.hpp"

namespace mdcurve {

/// Increasing homeomorphism domain -> range.
struct Homeomorphism {
    std::string kind;
    Interval domain;
    Interval range;
    std::function<double(double)> forward;
    std::function<double(double)> inverse;
    std::function<double(double)> derivative;  // empty unless the map is C^1

    double operator()(double t) const { return forward(t); }
    bool has_derivative() const { return static_cast<bool>(derivative); }
};

Homeomorphism identity_homeomorphism(Interval domain);

/// Sampled (t, h(t), h'(t)) table plus the kind tag.
nlohmann::json homeomorphism_to_json(const Homeomorphism& h, int samples = 65);

/// Maximal open intervals on which the curve is constant, resolved on a
/// uniform grid of `grid_size` points. An interval shorter than two grid
/// cells may be missed. Endpoints of detected intervals are refined by
/// bisection to about `tol`.
std::vector<Interval> constancy_intervals(const Curve& curve, int grid_size = 1024, double tol = 1e-10);

/// g = f o v_f^{-1} on [0, v_f(b)] together with v_f. Refuses curves that
/// are constant on some subinterval (use phi_reparam for those).
std::pair<Curve, Homeomorphism> arc_length_reparameterize(const Curve& curve, double tol = 1e-10, int depth = 16);

struct ReparamPlan {
    std::vector<Interval> constancy_intervals;
    Homeomorphism phi;
    std::vector<Interval> regular_components;
    std::function<double(double)> v_f;
    double total_variation = 0.0;
    double constancy_measure = 0.0;
};

/// phi(t) = v_f(t) + |U ∩ [a,t]| where U is the union of constancy intervals.
/// Throws std::runtime_error when the variation refinement does not converge.
ReparamPlan phi_reparam(const Curve& curve, int grid_size = 1024, int depth = 16);

nlohmann::json reparam_plan_to_json(const ReparamPlan& plan, int samples = 65);

/// C^1 increasing self-map of `domain` whose derivative vanishes exactly on M:
/// h(x) = a + c * integral_a^x dist(s, M) ds. M must have empty interior.
Homeomorphism zahorski_homeomorphism(const ClosedSet& M, Interval domain);

/// t -> f(h(t)); h.range must equal the curve domain.
Curve compose(const Curve& curve, const Homeomorphism& h);

}  // namespace mdcurve
