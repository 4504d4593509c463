#include "mdcurve/standard_curves.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>
#include <stdexcept>

namespace mdcurve::curves {

namespace {

std::vector<double> inside(std::initializer_list<double> ts, double a, double b)
{
    std::vector<double> out;
    for (double t : ts)
        if (a < t && t < b) out.push_back(t);
    return out;
}

}  // namespace

Curve segment(double a, double b, double speed)
{
    return Curve({a, b}, NormSpec::euclidean2d(), [speed](double t) { return Vector{speed * t, 0.0}; }, {},
                 std::abs(speed));
}

Curve abs_curve(double a, double b)
{
    return Curve({a, b}, NormSpec::euclidean2d(), [](double t) { return Vector{std::abs(t), 0.0}; },
                 inside({0.0}, a, b), 1.0);
}

Curve parabola(double a, double b)
{
    const double L = std::hypot(1.0, std::max(std::abs(a), std::abs(b)));
    return Curve({a, b}, NormSpec::euclidean2d(), [](double t) { return Vector{t, 0.5 * t * t}; }, {}, L);
}

Curve square(double a, double b)
{
    const double L = 2.0 * std::max(std::abs(a), std::abs(b));
    return Curve({a, b}, NormSpec::euclidean2d(), [](double t) { return Vector{t * t, 0.0}; }, {}, L);
}

Curve plateau()
{
    return Curve({0.0, 1.0}, NormSpec::euclidean2d(),
                 [](double t) { return Vector{std::min(t, 0.25) + std::max(t - 0.5, 0.0), 0.0}; }, {0.25, 0.5}, 1.0);
}

Curve step(double a, double b)
{
    return Curve({a, b}, NormSpec::euclidean2d(), [](double t) { return Vector{t < 0.0 ? 0.0 : 1.0, 0.0}; },
                 inside({0.0}, a, b));
}

Curve circle(double a, double b)
{
    return Curve({a, b}, NormSpec::euclidean2d(), [](double t) { return Vector{std::cos(t), std::sin(t)}; }, {}, 1.0);
}

Curve constant(double a, double b)
{
    return Curve({a, b}, NormSpec::euclidean2d(), [](double) { return Vector{0.0, 0.0}; }, {}, 0.0);
}

Curve log_oscillation(double a, double b)
{
    return Curve({a, b}, NormSpec::euclidean2d(),
                 [](double t) {
                     if (t == 0.0) return Vector{0.0, 0.0};
                     const double r = std::abs(t);
                     return Vector{r * (2.0 + std::sin(std::log(r))), 0.0};
                 },
                 inside({0.0}, a, b));
}

Curve piecewise_linear(std::vector<double> knots, std::vector<double> slopes)
{
    if (knots.size() < 2 || slopes.size() + 1 != knots.size())
        throw std::invalid_argument("piecewise_linear: need n+1 knots for n slopes");
    if (!std::is_sorted(knots.begin(), knots.end()) ||
        std::adjacent_find(knots.begin(), knots.end()) != knots.end())
        throw std::invalid_argument("piecewise_linear: knots must be strictly increasing");
    auto k = std::make_shared<const std::vector<double>>(knots);
    auto s = std::make_shared<const std::vector<double>>(slopes);
    auto base = std::make_shared<std::vector<double>>(knots.size(), 0.0);
    for (std::size_t i = 1; i < knots.size(); ++i)
        (*base)[i] = (*base)[i - 1] + slopes[i - 1] * (knots[i] - knots[i - 1]);
    double L = 0.0;
    for (double v : slopes) L = std::max(L, std::abs(v));
    std::vector<double> bps(knots.begin() + 1, knots.end() - 1);
    return Curve({knots.front(), knots.back()}, NormSpec::euclidean2d(),
                 [k, s, b = std::shared_ptr<const std::vector<double>>(base)](double t) {
                     auto it = std::upper_bound(k->begin(), k->end(), t);
                     std::size_t i = it == k->begin() ? 0 : static_cast<std::size_t>(it - k->begin()) - 1;
                     i = std::min(i, s->size() - 1);
                     return Vector{(*b)[i] + (*s)[i] * (t - (*k)[i]), 0.0};
                 },
                 std::move(bps), L);
}

Curve random_piecewise_smooth(std::uint64_t seed, int pieces)
{
    if (pieces < 1) throw std::invalid_argument("random_piecewise_smooth: need at least one piece");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);

    std::vector<double> knots{0.0};
    std::vector<double> cuts;
    for (int i = 1; i < pieces; ++i) cuts.push_back(0.05 + 0.9 * unit(rng));
    std::sort(cuts.begin(), cuts.end());
    knots.insert(knots.end(), cuts.begin(), cuts.end());
    knots.push_back(1.0);

    struct Piece {
        double t0;
        Vector p, v, w;
    };
    auto ps = std::make_shared<std::vector<Piece>>();
    Vector p{0.0, 0.0};
    double L = 0.0;
    for (int i = 0; i < pieces; ++i) {
        const double t0 = knots[static_cast<std::size_t>(i)];
        const double h = knots[static_cast<std::size_t>(i) + 1] - t0;
        // speed stays in [0.5, 2.5] so the pieces are regular
        const double ang = 2.0 * M_PI * unit(rng);
        const double speed = 1.0 + unit(rng);
        Vector v{speed * std::cos(ang), speed * std::sin(ang)};
        Vector w{0.25 * coef(rng), 0.25 * coef(rng)};
        ps->push_back({t0, p, v, w});
        p = {p[0] + v[0] * h + w[0] * h * h, p[1] + v[1] * h + w[1] * h * h};
        L = std::max(L, speed + 2.0 * std::hypot(w[0], w[1]) * h);
    }
    std::vector<double> bps(knots.begin() + 1, knots.end() - 1);
    return Curve({0.0, 1.0}, NormSpec::euclidean2d(),
                 [ps](double t) {
                     std::size_t i = ps->size() - 1;
                     while (i > 0 && t < (*ps)[i].t0) --i;
                     const Piece& q = (*ps)[i];
                     const double d = t - q.t0;
                     return Vector{q.p[0] + q.v[0] * d + q.w[0] * d * d, q.p[1] + q.v[1] * d + q.w[1] * d * d};
                 },
                 std::move(bps), L);
}

}  // namespace mdcurve::curves
