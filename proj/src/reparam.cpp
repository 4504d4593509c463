#include "mdcurve/reparam.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

#include "mdcurve/variation.hpp"

namespace mdcurve {

namespace {

std::vector<double> uniform_grid(double a, double b, int n)
{
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = i + 1 == n ? b : a + (b - a) * i / (n - 1);
    return g;
}

nlohmann::json interval_list(const std::vector<Interval>& ivs)
{
    nlohmann::json out = nlohmann::json::array();
    for (const Interval& iv : ivs) out.push_back({iv.lo, iv.hi});
    return out;
}

}  // namespace

Homeomorphism identity_homeomorphism(Interval domain)
{
    return {"identity", domain, domain, [](double t) { return t; }, [](double s) { return s; },
            [](double) { return 1.0; }};
}

nlohmann::json homeomorphism_to_json(const Homeomorphism& h, int samples)
{
    if (samples < 2) samples = 2;
    nlohmann::json table = nlohmann::json::array();
    for (double t : uniform_grid(h.domain.lo, h.domain.hi, samples)) {
        nlohmann::json row = {t, h.forward(t)};
        if (h.has_derivative()) row.push_back(h.derivative(t));
        else row.push_back(nullptr);
        table.push_back(row);
    }
    return {{"kind", h.kind},
            {"domain", {h.domain.lo, h.domain.hi}},
            {"range", {h.range.lo, h.range.hi}},
            {"columns", {"t", "h", "dh"}},
            {"table", table}};
}

std::vector<Interval> constancy_intervals(const Curve& curve, int grid_size, double tol)
{
    if (grid_size < 2) throw std::invalid_argument("constancy_intervals: grid_size must be >= 2");
    const std::vector<double> x = uniform_grid(curve.a(), curve.b(), grid_size);
    std::vector<Vector> f;
    f.reserve(x.size());
    for (double t : x) f.push_back(curve(t));
    const std::size_t cells = x.size() - 1;
    std::vector<bool> flat(cells, false);
    for (std::size_t i = 0; i < cells; ++i) {
        if (x[i + 1] <= x[i]) continue;
        flat[i] = distance(curve.space(), f[i], f[i + 1]) < tol && variation(curve, x[i], x[i + 1], 4).value < tol;
    }

    // V(s, t) < tol is monotone in each endpoint, so the run ends can be
    // pushed outward by bisection inside the neighbouring cells.
    auto small = [&](double s, double t) { return variation(curve, s, t, 3).value < tol; };
    std::vector<Interval> out;
    std::size_t i = 0;
    while (i < cells) {
        if (!flat[i]) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < cells && flat[j + 1]) ++j;
        double lo = x[i];
        double hi = x[j + 1];
        if (i > 0) {
            double bad = x[i - 1], good = x[i];
            for (int it = 0; it < 80 && good - bad > 1e-15 * std::max(1.0, std::abs(good)); ++it) {
                const double mid = 0.5 * (bad + good);
                (small(mid, x[i]) ? good : bad) = mid;
            }
            lo = good;
        }
        if (j + 2 < x.size()) {
            double good = x[j + 1], bad = x[j + 2];
            for (int it = 0; it < 80 && bad - good > 1e-15 * std::max(1.0, std::abs(good)); ++it) {
                const double mid = 0.5 * (bad + good);
                (small(x[j + 1], mid) ? good : bad) = mid;
            }
            hi = good;
        }
        out.push_back({lo, hi});
        i = j + 1;
    }
    return out;
}

std::pair<Curve, Homeomorphism> arc_length_reparameterize(const Curve& curve, double tol, int depth)
{
    const auto flats = constancy_intervals(curve, 1024, tol);
    if (!flats.empty())
        throw std::runtime_error("arc_length_reparameterize: curve is constant on (" + std::to_string(flats[0].lo) +
                                 ", " + std::to_string(flats[0].hi) + "); use phi_reparam instead");
    auto cv = std::make_shared<const CumulativeVariation>(cumulative_variation(curve, {curve.a(), curve.b()}, depth));
    const double total = cv->total();
    if (!(total > 0.0)) throw std::runtime_error("arc_length_reparameterize: curve has zero length");

    Homeomorphism v{"arc_length",
                    curve.domain(),
                    {0.0, total},
                    [cv](double t) { return cv->interpolate(t); },
                    [cv](double s) { return cv->inverse(s); },
                    {}};
    std::vector<double> bps;
    for (double t : curve.breakpoints()) bps.push_back(cv->interpolate(t));
    Curve g({0.0, total}, curve.space(), [curve, cv](double s) { return curve.eval_clamped(cv->inverse(s)); },
            std::move(bps), 1.0, curve.tail_bound());
    return {std::move(g), std::move(v)};
}

ReparamPlan phi_reparam(const Curve& curve, int grid_size, int depth)
{
    ReparamPlan plan;
    plan.constancy_intervals = constancy_intervals(curve, grid_size, 1e-10);
    std::vector<double> required = uniform_grid(curve.a(), curve.b(), grid_size);
    for (const Interval& u : plan.constancy_intervals) {
        required.push_back(u.lo);
        required.push_back(u.hi);
    }
    auto cv = std::make_shared<const CumulativeVariation>(cumulative_variation(curve, required, depth));
    if (!cv->converged)
        throw std::runtime_error("phi_reparam: variation refinement does not converge (unbounded variation?)");

    auto U = std::make_shared<const std::vector<Interval>>(plan.constancy_intervals);
    auto lambda_U = [U](double t) {
        double s = 0.0;
        for (const Interval& u : *U) s += std::max(0.0, std::min(t, u.hi) - u.lo);
        return s;
    };
    auto forward = [cv, lambda_U](double t) { return cv->interpolate(t) + lambda_U(t); };
    const double a = curve.a(), b = curve.b();
    const double top = forward(b);
    auto inverse = [forward, a, b, top](double s) {
        if (s <= 0.0) return a;
        if (s >= top) return b;
        double lo = a, hi = b;
        for (int it = 0; it < 200 && hi - lo > 2e-16 * std::max(1.0, std::abs(hi)); ++it) {
            const double mid = 0.5 * (lo + hi);
            (forward(mid) < s ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    };
    plan.v_f = [cv](double t) { return cv->interpolate(t); };
    plan.total_variation = cv->total();
    plan.constancy_measure = lambda_U(b);
    plan.phi = {"phi", curve.domain(), {0.0, top}, forward, inverse, {}};

    // regular components: complement of the closure of U, cut where the
    // one-sided chord/variation ratio drops below 1/2
    std::vector<Interval> comps;
    double start = a;
    for (const Interval& u : plan.constancy_intervals) {
        if (u.lo > start) comps.push_back({start, u.lo});
        start = u.hi;
    }
    if (b > start) comps.push_back({start, b});
    const double mesh = (b - a) / (grid_size - 1);
    auto ratio = [&](double s, double t) {
        const double v = cv->interpolate(t) - cv->interpolate(s);
        return v > 0.0 ? curve.dist(s, t) / v : 1.0;
    };
    for (const Interval& c : comps) {
        double lo = c.lo;
        for (double x : cv->required) {
            if (!(c.lo < x && x < c.hi)) continue;
            const double r = std::min(ratio(x, std::min(b, x + mesh)), ratio(std::max(a, x - mesh), x));
            if (r < 0.5 && x > lo) {
                plan.regular_components.push_back({lo, x});
                lo = x;
            }
        }
        plan.regular_components.push_back({lo, c.hi});
    }
    return plan;
}

nlohmann::json reparam_plan_to_json(const ReparamPlan& plan, int samples)
{
    if (samples < 2) samples = 2;
    nlohmann::json table = nlohmann::json::array();
    for (double t : uniform_grid(plan.phi.domain.lo, plan.phi.domain.hi, samples))
        table.push_back({t, plan.v_f(t), plan.phi(t)});
    return {{"constancy_intervals", interval_list(plan.constancy_intervals)},
            {"regular_components", interval_list(plan.regular_components)},
            {"total_variation", plan.total_variation},
            {"constancy_measure", plan.constancy_measure},
            {"phi_end", plan.phi.range.hi},
            {"columns", {"t", "v_f", "phi"}},
            {"table", table}};
}

Homeomorphism zahorski_homeomorphism(const ClosedSet& M, Interval domain)
{
    if (!(domain.lo < domain.hi)) throw std::invalid_argument("zahorski_homeomorphism: degenerate domain");
    if (M.has_interior()) throw std::invalid_argument("zahorski_homeomorphism: M has nonempty interior");
    const double a = domain.lo, b = domain.hi;
    auto pts = std::make_shared<std::vector<double>>(M.points);
    for (const Interval& iv : M.intervals) pts->push_back(iv.lo);
    for (double p : *pts)
        if (!domain.contains(p)) throw std::invalid_argument("zahorski_homeomorphism: M must lie inside the domain");
    if (pts->empty()) {
        Homeomorphism id = identity_homeomorphism(domain);
        id.kind = "zahorski";
        return id;
    }
    std::sort(pts->begin(), pts->end());
    pts->erase(std::unique(pts->begin(), pts->end()), pts->end());

    // I(x) = integral_a^x dist(s, M) ds, exact on each piece of the
    // piecewise-linear distance function
    auto cum = std::make_shared<std::vector<double>>(pts->size());
    {
        const double p0 = pts->front();
        (*cum)[0] = 0.5 * (p0 - a) * (p0 - a);
        for (std::size_t i = 1; i < pts->size(); ++i) {
            const double g = (*pts)[i] - (*pts)[i - 1];
            (*cum)[i] = (*cum)[i - 1] + 0.25 * g * g;
        }
    }
    auto integral = [pts, cum, a](double x) {
        const auto& P = *pts;
        const auto& C = *cum;
        if (x <= P.front()) {
            const double d0 = P.front() - a, d1 = P.front() - x;
            return 0.5 * (d0 * d0 - d1 * d1);
        }
        if (x >= P.back()) {
            const double d = x - P.back();
            return C.back() + 0.5 * d * d;
        }
        const std::size_t i = static_cast<std::size_t>(std::upper_bound(P.begin(), P.end(), x) - P.begin()) - 1;
        const double p = P[i], q = P[i + 1];
        const double mid = 0.5 * (p + q);
        if (x <= mid) return C[i] + 0.5 * (x - p) * (x - p);
        return C[i + 1] - 0.5 * (q - x) * (q - x);
    };
    const double total = integral(b);
    if (!(total > 0.0)) throw std::invalid_argument("zahorski_homeomorphism: distance integral vanishes");
    const double c = (b - a) / total;
    auto forward = [integral, a, b, c](double x) {
        if (x <= a) return a;
        if (x >= b) return b;
        return std::min(b, a + c * integral(x));
    };
    auto derivative = [pts, c](double x) {
        const auto& P = *pts;
        auto it = std::lower_bound(P.begin(), P.end(), x);
        double d = std::numeric_limits<double>::infinity();
        if (it != P.end()) d = *it - x;
        if (it != P.begin()) d = std::min(d, x - *(it - 1));
        return c * d;
    };
    auto inverse = [forward, pts, a, b](double s) {
        if (s <= a) return a;
        if (s >= b) return b;
        // bracket by the images of the points of M, then bisect within the piece
        double lo = a, hi = b;
        const auto& P = *pts;
        std::size_t l = 0, r = P.size();
        while (l < r) {
            const std::size_t m = (l + r) / 2;
            if (forward(P[m]) < s) l = m + 1;
            else r = m;
        }
        if (l < P.size()) hi = P[l];
        if (l > 0) lo = P[l - 1];
        for (int it = 0; it < 200 && hi - lo > 2e-16 * std::max(1.0, std::abs(hi)); ++it) {
            const double mid = 0.5 * (lo + hi);
            (forward(mid) < s ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    };
    return {"zahorski", domain, domain, forward, inverse, derivative};
}

Curve compose(const Curve& curve, const Homeomorphism& h)
{
    const double scale = std::max({1.0, std::abs(curve.a()), std::abs(curve.b())});
    if (std::abs(h.range.lo - curve.a()) > 1e-12 * scale || std::abs(h.range.hi - curve.b()) > 1e-12 * scale)
        throw std::invalid_argument("compose: homeomorphism range does not match the curve domain");
    std::vector<double> bps;
    for (double t : curve.breakpoints()) bps.push_back(h.inverse(t));
    return Curve(h.domain, curve.space(), [curve, fwd = h.forward](double t) { return curve.eval_clamped(fwd(t)); },
                 std::move(bps), std::nullopt, curve.tail_bound());
}

}  // namespace mdcurve
