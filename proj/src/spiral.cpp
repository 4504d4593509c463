#include "mdcurve/spiral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mdcurve {

namespace {

// Root of an increasing function on [lo, hi]: Newton steps kept inside the
// bracket, bisection when a step would leave it.
template <class F, class D>
double solve_increasing(F f, D df, double target, double lo, double hi)
{
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double v = f(x) - target;
        if (v == 0.0) return x;
        if (v > 0.0) hi = x;
        else lo = x;
        if (hi - lo <= 1e-15 * std::max(1.0, std::abs(x))) break;
        const double d = df(x);
        double next = d > 0.0 ? x - v / d : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - x) <= 1e-16 * std::max(1.0, std::abs(x))) return next;
        x = next;
    }
    return 0.5 * (lo + hi);
}

double arg_from_half(const SpiralCurve& g, double t)
{
    const auto p = g.point(0.5 + t);
    const auto c = g.point(0.5);
    return std::atan2(p[1] - c[1], p[0] - c[0]);
}

}  // namespace

std::array<double, 2> spiral_arc(double a, double b, double t)
{
    if (t == 0.0) return {0.0, 0.0};
    const double r = t * std::abs(b) / std::sqrt(b * b + 1.0);
    const double phi = std::log(r / a) / b;
    return {r * std::cos(phi), r * std::sin(phi)};
}

SpiralConstraints spiral_constraints(double q, double alpha, double b, double margin)
{
    const double k = b / std::sqrt(b * b + 1.0);
    const double m = q + margin * (1.0 - q);
    SpiralConstraints c;
    c.k_exceeds_q = k > m;
    c.tangent_descends = std::tan(alpha) * (1.0 + margin) < b;
    c.second_bound = k - k * (1.0 - k) / std::expm1(b * alpha) > m;
    c.graph_condition = b * std::sin(alpha) > (1.0 + margin) * std::cos(alpha);
    return c;
}

double choose_b(double q, double alpha, double grid_step)
{
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("choose_b: q must lie in (0,1)");
    if (!(alpha > 0.0 && alpha < std::numbers::pi / 2)) throw std::invalid_argument("choose_b: alpha must lie in (0, pi/2)");
    if (!(grid_step > 0.0)) throw std::invalid_argument("choose_b: grid_step must be positive");
    for (long n = 1; n < 100000000; ++n) {
        const double b = n * grid_step;
        if (spiral_constraints(q, alpha, b, 0.01).all()) return b;
    }
    throw std::runtime_error("choose_b: no admissible b found");
}

SpiralParams make_spiral_params(double q, double alpha, double b)
{
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("spiral: q must lie in (0,1)");
    if (!(alpha > 0.0 && alpha < std::numbers::pi / 2)) throw std::invalid_argument("spiral: alpha must lie in (0, pi/2)");
    if (!(b > 0.0)) throw std::invalid_argument("spiral: b must be positive");
    const SpiralConstraints c = spiral_constraints(q, alpha, b);
    if (!c.all()) {
        std::string which = !c.k_exceeds_q        ? "k > q"
                            : !c.tangent_descends ? "tan(alpha) < b"
                            : !c.second_bound     ? "k - k(1-k)/(e^{b alpha}-1) > q"
                                                  : "b sin(alpha) > cos(alpha)";
        throw std::invalid_argument("spiral: b = " + std::to_string(b) + " violates " + which);
    }
    SpiralParams p;
    p.q = q;
    p.alpha = alpha;
    p.b = b;
    p.k = b / std::sqrt(b * b + 1.0);
    p.beta = std::atan(1.0 / b);
    p.s0 = std::expm1(b * alpha) / p.k;
    p.s1 = std::exp(b * alpha) * std::expm1(b * (alpha - p.beta)) / p.k;
    p.L = p.s0 + p.s1;

    const SpiralCurve g(p);
    double lo = 0.5, hi = 0.5 + p.s0;
    if (!(arg_from_half(g, hi) < -alpha)) throw std::runtime_error("spiral: argument never reaches -alpha on the first arc");
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (arg_from_half(g, mid) > -alpha) lo = mid;
        else hi = mid;
    }
    p.t_star = 0.5 * (lo + hi);
    return p;
}

SpiralParams make_spiral_params(double q, double alpha) { return make_spiral_params(q, alpha, choose_b(q, alpha)); }

SpiralCurve::SpiralCurve(SpiralParams params) : p_(params) {}

std::array<double, 2> SpiralCurve::right(double t) const
{
    const double k_inv = 1.0 / p_.k;
    if (t <= 1.0) return {t, 0.0};
    if (t <= 1.0 + p_.s0) return spiral_arc(1.0, -p_.b, t + k_inv - 1.0);
    if (t <= 1.0 + p_.L) return spiral_arc(std::exp(2.0 * p_.b * p_.alpha), p_.b, t + k_inv - 1.0);
    const auto e = spiral_arc(std::exp(2.0 * p_.b * p_.alpha), p_.b, p_.L + k_inv);
    return {e[0] + (t - 1.0 - p_.L), e[1]};
}

std::array<double, 2> SpiralCurve::point(double t) const
{
    if (t >= 0.0) return right(t);
    const auto m = right(1.0 - t);
    return {1.0 - m[0], m[1]};
}

std::vector<double> SpiralCurve::joints() const
{
    return {-p_.L, -p_.s0, 0.0, 1.0, 1.0 + p_.s0, 1.0 + p_.L};
}

Curve SpiralCurve::curve(double extra) const
{
    const double h = 0.5 + p_.L + extra;
    const SpiralCurve self = *this;
    return Curve({0.5 - h, 0.5 + h}, NormSpec::euclidean2d(),
                 [self](double t) {
                     const auto p = self.point(t);
                     return Vector{p[0], p[1]};
                 },
                 joints(), 1.0);
}

SpiralGraph::SpiralGraph(const SpiralParams& params) : p_(params)
{
    const double eba = std::exp(p_.b * p_.alpha);
    x_a_ = eba * std::cos(p_.alpha);
    const double r = std::exp(2.0 * p_.b * p_.alpha - p_.b * p_.beta);
    x_b_ = r * std::cos(p_.beta);
    y_b_ = -r * std::sin(p_.beta);
}

double SpiralGraph::right(double x) const
{
    const double b = p_.b;
    if (x <= 1.0) return 0.0;
    if (x >= x_b_) return y_b_;
    if (x <= x_a_) {
        // first arc, polar angle -psi with psi in [0, alpha]
        const double psi = solve_increasing([b](double s) { return std::exp(b * s) * std::cos(s); },
                                            [b](double s) { return std::exp(b * s) * (b * std::cos(s) - std::sin(s)); },
                                            x, 0.0, p_.alpha);
        return -std::exp(b * psi) * std::sin(psi);
    }
    const double c = 2.0 * b * p_.alpha;
    const double phi = solve_increasing([b, c](double s) { return std::exp(c + b * s) * std::cos(s); },
                                        [b, c](double s) { return std::exp(c + b * s) * (b * std::cos(s) - std::sin(s)); },
                                        x, -p_.alpha, -p_.beta);
    return std::exp(c + b * phi) * std::sin(phi);
}

double SpiralGraph::operator()(double x) const { return x >= 0.5 ? right(x) : right(1.0 - x); }

RatioBoundReport spiral_ratio_bound_check(const SpiralParams& params, double t_max, int samples)
{
    const SpiralCurve g(params);
    if (!(t_max > 0.0)) t_max = 10.0 * (1.0 + params.L);
    RatioBoundReport r;
    r.bound = 1.0 / params.k;
    std::vector<double> ts;
    for (int i = 1; i <= samples; ++i) ts.push_back(t_max * i / samples);
    for (double j : {1.0, 1.0 + params.s0, 1.0 + params.L})
        if (j <= t_max) ts.push_back(j);
    for (double t : ts) {
        const auto p = g.point(t);
        const double ratio = t / std::hypot(p[0], p[1]);
        if (ratio > r.max_ratio) {
            r.max_ratio = ratio;
            r.argmax = t;
        }
    }
    r.pass = r.max_ratio <= r.bound + 1e-9;
    return r;
}

void to_json(nlohmann::json& j, const SpiralParams& p)
{
    j = nlohmann::json{{"q", p.q},   {"alpha", p.alpha}, {"b", p.b}, {"k", p.k},          {"beta", p.beta},
                       {"s0", p.s0}, {"s1", p.s1},       {"L", p.L}, {"t_star", p.t_star}};
}

}  // namespace mdcurve
