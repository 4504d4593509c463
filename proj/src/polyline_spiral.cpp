#include "mdcurve/polyline_spiral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace mdcurve {

namespace {

using P2 = std::array<double, 2>;

NormSpec reflected(const NormSpec& n)
{
    if (n.kind() != NormKind::polygon_gauge) return n;
    std::vector<P2> v = n.vertices();
    for (P2& p : v) p[1] = -p[1];
    return NormSpec::polygon_gauge(std::move(v));
}

double norm2(const NormSpec& n, double x, double y)
{
    const double v[2] = {x, y};
    return norm_eval(n, v);
}

class HalfBuilder {
public:
    HalfBuilder(const NormSpec& n, double q, double alpha, double eps, int budget)
        : n_(n), q_(q), alpha_(alpha), eps_(eps), budget_(budget), x1_(1.0 / norm2(n, 1.0, 0.0))
    {
        for (int i = 0; i <= 128; ++i) s_.push_back(i / 128.0);
    }

    std::optional<PolylineHalf> build()
    {
        h_.t = {0.0, 1.0};
        h_.p = {P2{0.0, 0.0}, P2{x1_, 0.0}};
        int j = 1;
        for (;; ++j) {
            const bool steep = std::atan(j * eps_) > alpha_;
            if (!extend(unit(-j * eps_), steep, false)) return std::nullopt;
            if (steep) break;
        }
        for (int i = j - 1; i >= 1; --i)
            if (!extend(unit(-i * eps_), false, false)) return std::nullopt;
        if (!extend(unit(0.0), false, true)) return std::nullopt;
        h_.ray_direction = unit(0.0);
        return h_;
    }

    int used() const { return used_; }

private:
    P2 unit(double slope) const
    {
        const double len = norm2(n_, 1.0, slope);
        return {1.0 / len, slope / len};
    }

    // t = T + u, split so that t - s keeps full precision for small u
    double min_ratio(double T, double u, const P2& p) const
    {
        double m = INFINITY;
        for (double s : s_) m = std::min(m, norm2(n_, p[0] - s * x1_, p[1]) / ((T - s) + u));
        return m;
    }

    // Appends one segment in direction d, doubling its length until the
    // chord ratio at its end recovers; every new stretch is certified > q.
    bool extend(const P2& d, bool steep, bool final)
    {
        const double T = h_.t.back();
        const P2 V = h_.p.back();
        const double target = 0.5 * (1.0 + q_);
        double prev = 0.0, len = 1.0;
        for (;;) {
            if (++used_ > budget_)
                throw std::runtime_error("polyline spiral: segment budget of " + std::to_string(budget_) +
                                         " doublings exhausted at eps = " + std::to_string(eps_));
            std::vector<double> offsets;
            for (int i = 1; i <= 32; ++i) offsets.push_back(prev + (len - prev) * i / 32.0);
            if (prev == 0.0)
                for (int k = 1; k <= 20; ++k) offsets.push_back(std::ldexp(len, -k));
            if (final)
                for (int k = 1; k <= 10; ++k) offsets.push_back(len * std::ldexp(1.0, k));
            for (double u : offsets) {
                const double r = min_ratio(T, u, {V[0] + u * d[0], V[1] + u * d[1]});
                h_.min_ratio = std::min(h_.min_ratio, r);
                if (!(r > q_)) return false;
            }
            const P2 end{V[0] + len * d[0], V[1] + len * d[1]};
            bool done = min_ratio(T, len, end) >= target;
            if (steep) done = done && std::atan2(end[1], end[0] - 0.5 * x1_) < -alpha_;
            if (done) {
                h_.t.push_back(T + len);
                h_.p.push_back(end);
                return true;
            }
            prev = len;
            len *= 2.0;
        }
    }

    const NormSpec& n_;
    double q_, alpha_, eps_;
    int budget_;
    double x1_;
    std::vector<double> s_;
    PolylineHalf h_;
    int used_ = 0;
};

double arg_from_center(const PolylineHalf& h, double t)
{
    const P2 p = h.at(t);
    return std::atan2(p[1], p[0] - 0.5 * h.p[1][0]);
}

}  // namespace

P2 PolylineHalf::at(double s) const
{
    if (s >= t.back()) return {p.back()[0] + (s - t.back()) * ray_direction[0], p.back()[1] + (s - t.back()) * ray_direction[1]};
    const std::size_t i = std::upper_bound(t.begin(), t.end(), s) - t.begin() - 1;
    const double w = (s - t[i]) / (t[i + 1] - t[i]);
    return {p[i][0] + w * (p[i + 1][0] - p[i][0]), p[i][1] + w * (p[i + 1][1] - p[i][1])};
}

P2 PolylineSpiral::point(double t) const
{
    if (t >= 0.0) return right.at(t);
    const P2 m = left.at(1.0 - t);
    return {right.p[1][0] - m[0], m[1]};
}

std::vector<double> PolylineSpiral::vertices() const
{
    std::vector<double> v = right.t;
    for (double s : left.t) v.push_back(1.0 - s);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

Curve PolylineSpiral::curve() const
{
    const double h = std::max(right.t.back(), left.t.back()) + 0.5;
    const PolylineSpiral self = *this;
    return Curve({0.5 - h, 0.5 + h}, norm,
                 [self](double t) {
                     const P2 p = self.point(t);
                     return Vector{p[0], p[1]};
                 },
                 vertices(), 1.0);
}

PolylineSpiral build_polyline_spiral(const NormSpec& norm, double q, double alpha, int segment_budget)
{
    if (norm.dimension() != 2 || norm.kind() == NormKind::l2_truncated)
        throw std::invalid_argument("polyline spiral needs a planar norm");
    const NormValidation v = validate_norm_spec(norm);
    if (!v.ok) throw std::invalid_argument("polyline spiral: invalid norm (" + v.axiom + ": " + v.detail + ")");
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("polyline spiral: q must lie in (0,1)");
    if (!(alpha > 0.0 && alpha < std::numbers::pi / 2)) throw std::invalid_argument("polyline spiral: alpha must lie in (0, pi/2)");

    const NormSpec mirror = reflected(norm);
    PolylineSpiral out;
    out.norm = norm;
    out.q = q;
    out.alpha = alpha;
    double eps = 2.0 * std::tan(alpha);
    for (int sweep = 0; sweep < 30; ++sweep, eps *= 0.5) {
        HalfBuilder rb(norm, q, alpha, eps, segment_budget);
        auto r = rb.build();
        out.segments += rb.used();
        if (!r) continue;
        std::optional<PolylineHalf> l = r;
        if (!(mirror == norm)) {
            HalfBuilder lb(mirror, q, alpha, eps, segment_budget);
            l = lb.build();
            out.segments += lb.used();
            if (!l) continue;
        }
        out.epsilon = eps;
        out.right = *r;
        out.left = *l;

        std::size_t i = 2;
        while (i < out.right.t.size() && arg_from_center(out.right, out.right.t[i]) > -alpha) ++i;
        if (i == out.right.t.size()) throw std::runtime_error("polyline spiral: chord never turns past -alpha");
        double lo = out.right.t[i - 1], hi = out.right.t[i];
        for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (arg_from_center(out.right, mid) > -alpha) lo = mid;
            else hi = mid;
        }
        out.t_star = 0.5 * (lo + hi) - 0.5;
        return out;
    }
    throw std::runtime_error("polyline spiral: no eps down to 2 tan(alpha) / 2^29 certifies ratio > q");
}

double min_pair_ratio(const Curve& g, const std::vector<double>& ts, int s_samples)
{
    double m = INFINITY;
    for (int i = 0; i < s_samples; ++i) {
        const double s = static_cast<double>(i) / (s_samples - 1);
        for (double t : ts)
            if (t != s) m = std::min(m, g.dist(s, t) / std::abs(t - s));
    }
    return m;
}

void to_json(nlohmann::json& j, const PolylineSpiral& s)
{
    j = nlohmann::json{{"type", "polyline"},
                       {"norm", s.norm},
                       {"q", s.q},
                       {"alpha", s.alpha},
                       {"epsilon", s.epsilon},
                       {"segments", s.segments},
                       {"t_star", s.t_star},
                       {"right_vertices", s.right.t.size()},
                       {"left_vertices", s.left.t.size()},
                       {"min_sampled_ratio", std::min(s.right.min_ratio, s.left.min_ratio)}};
}

}  // namespace mdcurve
