#include "mdcurve/hat_curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mdcurve {

HatSchedule parse_hat_schedule(const std::string& name)
{
    if (name == "slow") return HatSchedule::slow;
    if (name == "dyadic") return HatSchedule::dyadic;
    throw std::invalid_argument("unknown hat schedule '" + name + "'");
}

std::string to_string(HatSchedule s) { return s == HatSchedule::slow ? "slow" : "dyadic"; }

double schedule_alpha(HatSchedule s, int n)
{
    if (n < 1) throw std::invalid_argument("schedule level must be >= 1");
    if (s == HatSchedule::dyadic) return std::numbers::pi / 2 * (1.0 - std::ldexp(1.0, -n));
    return std::numbers::pi / 2 - (std::numbers::pi / 4) / (1.0 + (n - 1) / 32.0);
}

double schedule_q(HatSchedule s, int n)
{
    if (n < 1) throw std::invalid_argument("schedule level must be >= 1");
    if (s == HatSchedule::dyadic) return 1.0 - std::ldexp(1.0, -n - 1);
    return 1.0 - 0.5 / (1.0 + (n - 1) / 32.0);
}

HatLevel build_hat_level(int n, HatSchedule schedule)
{
    HatLevel l;
    l.n = n;
    l.spiral = make_spiral_params(schedule_q(schedule, n), schedule_alpha(schedule, n));
    const SpiralGraph g(l.spiral);
    l.x_flat = 2.0 * g.x_flat() - 1.0;
    l.x_join = 2.0 * g.x_first_end() - 1.0;
    l.y_flat = 2.0 * g.y_flat();
    l.graph_length = 2.0 * g.graph_length();
    l.L = 1.1 * (l.x_flat + n * l.graph_length);
    l.a = l.x_flat / l.L;
    l.p = l.graph_length / l.L;
    const auto z = SpiralCurve(l.spiral).point(0.5 + l.spiral.t_star);
    l.u_star = (2.0 * z[0] - 1.0) / l.L;
    l.peak = -l.y_flat / l.L;
    return l;
}

HatCurve::HatCurve(int depth, HatSchedule schedule) : depth_(depth), schedule_(schedule)
{
    if (depth < 1) throw std::invalid_argument("hat curve depth must be >= 1");
    for (int n = 1; n <= depth + 1; ++n) {
        levels_.push_back(build_hat_level(n, schedule));
        graphs_.emplace_back(levels_.back().spiral);
    }
    levels_[0].theta = 0.4;
    for (std::size_t i = 1; i < levels_.size(); ++i) {
        const HatLevel& prev = levels_[i - 1];
        levels_[i].theta =
            0.9 * std::min(prev.theta * prev.p / (4.0 * levels_[i].p), prev.theta / (2.0 * prev.L));
    }
    const HatLevel& last = levels_[depth - 1];
    if (!(last.theta / last.L >= 1e-13))
        throw std::runtime_error("hat curve: plateau half-width theta_N/L_N = " + std::to_string(last.theta / last.L) +
                                 " at depth " + std::to_string(depth) +
                                 " is below double resolution; use a smaller depth or the slow schedule");
}

const HatLevel& HatCurve::level(int n) const
{
    if (n < 1 || n > static_cast<int>(levels_.size())) throw std::out_of_range("hat level out of range");
    return levels_[n - 1];
}

double HatCurve::G(int n, double u) const
{
    const HatLevel& l = level(n);
    const double X = l.L * std::abs(u);
    if (X >= l.x_flat) return 0.0;
    return (2.0 * graphs_[n - 1](X / 2.0 + 0.5) - l.y_flat) / l.L;
}

double HatCurve::hat(int n, double rho, double theta, double x) const { return theta * G(n, (x - rho) / theta); }

double HatCurve::S(double x, int n) const
{
    if (n < 0 || n > depth_) throw std::out_of_range("S_n: level out of range");
    double lo = -1.0, hi = 1.0, value = 0.0;
    for (int m = 1; m <= n; ++m) {
        const HatLevel& l = levels_[m - 1];
        const double rho = x <= 0.5 * (lo + hi) ? lo + l.theta : hi - l.theta;
        const double off = std::abs(x - rho);
        if (off >= l.theta) break;
        value += hat(m, rho, l.theta, x);
        const double w = l.theta / l.L;
        if (off > w) break;
        lo = rho - w;
        hi = rho + w;
    }
    return value;
}

double HatCurve::peak_value(int n) const
{
    double s = 0.0;
    for (int m = 1; m <= n; ++m) s += levels_[m - 1].theta * levels_[m - 1].peak;
    return s;
}

std::vector<double> HatCurve::hat_centers(int n) const
{
    if (n < 1 || n > depth_ + 1) throw std::out_of_range("hat level out of range");
    std::vector<double> c{-1.0 + levels_[0].theta, 1.0 - levels_[0].theta};
    for (int m = 2; m <= n; ++m) {
        const HatLevel& parent = levels_[m - 2];
        const double w = parent.theta / parent.L, t = levels_[m - 1].theta;
        std::vector<double> next;
        for (double rho : c) {
            next.push_back(rho - w + t);
            next.push_back(rho + w - t);
        }
        c = std::move(next);
    }
    return c;
}

std::vector<Interval> HatCurve::family_G(int n) const
{
    const double t = level(n).theta;
    std::vector<Interval> out;
    for (double rho : hat_centers(n)) out.push_back({rho - t, rho + t});
    return out;
}

std::vector<Interval> HatCurve::family_F(int n) const
{
    const double w = level(n).theta / level(n).L;
    std::vector<Interval> out;
    for (double rho : hat_centers(n)) out.push_back({rho - w, rho + w});
    return out;
}

std::vector<double> HatCurve::breakpoints() const
{
    std::vector<double> out;
    for (int n = 1; n <= depth_; ++n) {
        const HatLevel& l = levels_[n - 1];
        for (double rho : hat_centers(n))
            for (double u : {l.a, l.x_join / l.L, 1.0 / l.L}) {
                out.push_back(rho - l.theta * u);
                out.push_back(rho + l.theta * u);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Curve HatCurve::graph_curve() const
{
    auto self = std::make_shared<const HatCurve>(*this);
    return Curve({-1.0, 1.0}, NormSpec::euclidean2d(), [self](double x) { return Vector{x, self->S(x)}; },
                 breakpoints(), std::nullopt, tail_bound());
}

double HatCurve::tail_bound() const { return 2.0 * levels_[depth_].theta; }

double HatCurve::exact_length() const
{
    double s = 2.0;
    for (int n = 1; n <= depth_; ++n) {
        const HatLevel& l = levels_[n - 1];
        s += std::ldexp(l.theta * (l.p - 2.0 * l.a), n);
    }
    return s;
}

double HatCurve::length_bound() const
{
    double s = 1.0;
    for (int n = 1; n <= depth_; ++n) s += std::ldexp(levels_[n - 1].theta * levels_[n - 1].p, n);
    return s;
}

CantorPoint HatCurve::cantor_point(const std::vector<int>& code) const
{
    if (code.empty()) throw std::invalid_argument("cantor code must be nonempty");
    if (static_cast<int>(code.size()) > depth_)
        throw std::invalid_argument("cantor code of length " + std::to_string(code.size()) + " exceeds depth " +
                                    std::to_string(depth_));
    CantorPoint out;
    out.code = code;
    double lo = -1.0, hi = 1.0;
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (code[i] != 0 && code[i] != 1) throw std::invalid_argument("cantor code bits must be 0 or 1");
        const HatLevel& l = levels_[i];
        const double rho = code[i] == 0 ? lo + l.theta : hi - l.theta;
        out.centers.push_back(rho);
        out.chain.push_back({rho - l.theta, rho + l.theta});
        lo = rho - l.theta / l.L;
        hi = rho + l.theta / l.L;
    }
    out.x = out.centers.back();
    out.bracket = out.chain.back();
    return out;
}

std::pair<double, double> HatCurve::spike_pair(const std::vector<int>& code, int n) const
{
    const CantorPoint c = cantor_point(code);
    if (n < 1 || n > static_cast<int>(code.size())) throw std::out_of_range("spike level out of range");
    const HatLevel& l = levels_[n - 1];
    const double rho = c.centers[n - 1];
    return {rho - l.theta * l.u_star, rho + l.theta * l.u_star};
}

double psi(int k, double t)
{
    if (k <= 2) throw std::invalid_argument("psi_k requires k > 2");
    return (t + 2.0 / k) / (1.0 - 2.0 / k);
}

double psi_case_bound(int n, double q)
{
    const int k = n + 1;
    return std::max({psi(k, 1.0 / q), psi(k, psi(k, 1.0)), psi(k, 1.0 + 2.0 / k)});
}

void to_json(nlohmann::json& j, const HatLevel& l)
{
    j = nlohmann::json{{"n", l.n},       {"spiral", l.spiral}, {"x_flat", l.x_flat},       {"x_join", l.x_join},
                       {"y_flat", l.y_flat}, {"graph_length", l.graph_length}, {"L", l.L}, {"a", l.a},
                       {"p", l.p},       {"u_star", l.u_star}, {"peak", l.peak},           {"theta", l.theta}};
}

nlohmann::json hat_metadata(const HatCurve& h)
{
    nlohmann::json levels = nlohmann::json::array();
    for (const HatLevel& l : h.levels()) levels.push_back(l);
    return nlohmann::json{{"type", "hat"},
                          {"depth", h.depth()},
                          {"schedule", to_string(h.schedule())},
                          {"levels", levels},
                          {"tail_bound", h.tail_bound()},
                          {"exact_length", h.exact_length()},
                          {"length_bound", h.length_bound()},
                          {"breakpoints", h.breakpoints().size()}};
}

}  // namespace mdcurve
