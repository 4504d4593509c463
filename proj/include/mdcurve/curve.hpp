#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mdcurve/normed_space.hpp"

namespace mdcurve {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double length() const { return hi - lo; }
    bool contains(double t) const { return lo <= t && t <= hi; }
    bool operator==(const Interval&) const = default;
};

/// A path [a,b] -> (space, norm).
///
/// Immutable after construction. `breakpoints` lists the parameters where the
/// path may fail to be smooth; partitions used for variation always include
/// them. `lipschitz_bound` and `tail_bound` are optional certificates supplied
/// by the builder.
class Curve {
public:
    using Evaluator = std::function<Vector(double)>;

    Curve(Interval domain, NormSpec space, Evaluator evaluator, std::vector<double> breakpoints = {},
          std::optional<double> lipschitz_bound = std::nullopt, std::optional<double> tail_bound = std::nullopt);

    const Interval& domain() const { return domain_; }
    double a() const { return domain_.lo; }
    double b() const { return domain_.hi; }
    const NormSpec& space() const { return space_; }
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    std::optional<double> lipschitz_bound() const { return lipschitz_; }
    std::optional<double> tail_bound() const { return tail_; }

    /// f(t); throws std::out_of_range outside the domain.
    Vector operator()(double t) const;

    /// f(t) with t clamped into the domain (for callers whose arithmetic may
    /// spill past an endpoint by rounding).
    Vector eval_clamped(double t) const;

    /// ||f(s) - f(t)||
    double dist(double s, double t) const;

    const Evaluator& evaluator() const { return eval_; }

private:
    Interval domain_;
    NormSpec space_;
    Evaluator eval_;
    std::vector<double> breakpoints_;
    std::optional<double> lipschitz_;
    std::optional<double> tail_;
};

/// Free-function spelling of Curve::operator().
Vector eval(const Curve& curve, double t);

/// Breakpoints of `curve` strictly inside (lo, hi).
std::vector<double> breakpoints_within(const Curve& curve, double lo, double hi);

}  // namespace mdcurve
