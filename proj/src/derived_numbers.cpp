#include "mdcurve/derived_numbers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace mdcurve {

namespace {

constexpr int kCauchyIncrements = 3;

double resolution_at(double x) { return 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x)); }

SideRatios side(const Curve& curve, double x, const std::vector<double>& scales, double sign, const Vector& fx)
{
    SideRatios s;
    for (double t : scales) {
        const double y = x + sign * t;
        if (!curve.domain().contains(y)) continue;
        s.scales.push_back(t);
        s.ratios.push_back(distance(curve.space(), curve(y), fx) / std::abs(y - x));  // realized step
    }
    if (s.ratios.empty()) return s;
    s.available = true;
    const auto [mn, mx] = std::minmax_element(s.ratios.begin(), s.ratios.end());
    s.upper.value = *mx;
    s.lower.value = *mn;

    const std::size_t n = s.ratios.size();
    const std::size_t first = n > kCauchyIncrements ? n - kCauchyIncrements : 1;
    for (std::size_t j = first; j < n; ++j) s.cauchy = std::max(s.cauchy, std::abs(s.ratios[j] - s.ratios[j - 1]));

    // blow-up: large and still increasing towards the finest scale
    const double last = s.ratios.back();
    const bool growing = n >= 2 && last > s.ratios[n - 2];
    if (*mx > kInfiniteRatio && growing) s.upper.infinite = true;
    bool tail_large = n >= 3;
    for (std::size_t j = n >= 3 ? n - 3 : 0; j < n; ++j) tail_large = tail_large && s.ratios[j] > kInfiniteRatio;
    if (tail_large && growing) s.lower.infinite = true;
    return s;
}

}  // namespace

Ladder Ladder::defaults_for(const Curve& curve) { return {1e-2 * (curve.b() - curve.a()), 0.5, 20}; }

void Ladder::validate() const
{
    if (!(t0 > 0.0)) throw std::invalid_argument("ladder t0 must be positive");
    if (!(ratio > 0.0 && ratio < 1.0)) throw std::invalid_argument("ladder ratio must lie in (0,1)");
    if (steps < 4) throw std::invalid_argument("ladder needs at least 4 steps");
}

std::vector<double> Ladder::scales() const
{
    std::vector<double> s(static_cast<std::size_t>(steps));
    double t = t0;
    for (int j = 0; j < steps; ++j, t *= ratio) s[static_cast<std::size_t>(j)] = t;
    return s;
}

double Ladder::finest() const { return t0 * std::pow(ratio, steps - 1); }

DerivedNumberEstimate derived_numbers(const Curve& curve, double x, const Ladder& ladder)
{
    ladder.validate();
    if (!curve.domain().contains(x)) throw std::invalid_argument("derived_numbers: x outside curve domain");
    if (ladder.finest() < resolution_at(x)) {
        std::ostringstream os;
        os.precision(3);
        os << "ladder reaches scale " << ladder.finest() << " below the parameter resolution " << resolution_at(x)
           << " at x = " << x;
        throw std::domain_error(os.str());
    }
    const std::vector<double> scales = ladder.scales();
    const Vector fx = curve(x);
    DerivedNumberEstimate e;
    e.x = x;
    e.plus = side(curve, x, scales, 1.0, fx);
    e.minus = side(curve, x, scales, -1.0, fx);
    return e;
}

MetricDerivativeResult metric_derivative_detail(const Curve& curve, double x, const Ladder& ladder, double tol)
{
    MetricDerivativeResult r;
    r.estimate = derived_numbers(curve, x, ladder);
    const SideRatios* sides[] = {&r.estimate.plus, &r.estimate.minus};
    double hi = -std::numeric_limits<double>::infinity();
    double lo = std::numeric_limits<double>::infinity();
    double finest_sum = 0.0;
    int n_sides = 0;
    bool infinite = false;
    for (const SideRatios* s : sides) {
        if (!s->available) continue;
        ++n_sides;
        infinite = infinite || s->upper.infinite || s->lower.infinite;
        hi = std::max(hi, s->upper.value);
        lo = std::min(lo, s->lower.value);
        r.cauchy = std::max(r.cauchy, s->cauchy);
        finest_sum += s->ratios.back();
    }
    if (n_sides == 0 || infinite) {
        r.spread = std::numeric_limits<double>::infinity();
        return r;
    }
    r.spread = hi - lo;
    r.value = finest_sum / n_sides;
    r.exists = r.cauchy <= tol && r.spread <= std::max(tol, 3.0 * r.cauchy);
    return r;
}

std::optional<double> metric_derivative(const Curve& curve, double x, const Ladder& ladder, double tol)
{
    const MetricDerivativeResult r = metric_derivative_detail(curve, x, ladder, tol);
    if (!r.exists) return std::nullopt;
    return r.value;
}

void to_json(nlohmann::json& j, const DerivedNumber& d)
{
    if (d.infinite) j = "inf";
    else j = d.value;
}

void to_json(nlohmann::json& j, const DerivedNumberEstimate& e)
{
    auto side_json = [](const SideRatios& s) {
        if (!s.available) return nlohmann::json(nullptr);
        return nlohmann::json{{"upper", s.upper}, {"lower", s.lower}, {"cauchy", s.cauchy},
                              {"scales", s.scales}, {"ratios", s.ratios}};
    };
    j = nlohmann::json{{"x", e.x}, {"plus", side_json(e.plus)}, {"minus", side_json(e.minus)}};
}

}  // namespace mdcurve
