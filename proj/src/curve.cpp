#include "mdcurve/curve.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mdcurve {

Curve::Curve(Interval domain, NormSpec space, Evaluator evaluator, std::vector<double> breakpoints,
             std::optional<double> lipschitz_bound, std::optional<double> tail_bound)
    : domain_(domain), space_(std::move(space)), eval_(std::move(evaluator)), breakpoints_(std::move(breakpoints)),
      lipschitz_(lipschitz_bound), tail_(tail_bound)
{
    if (!(domain_.lo <= domain_.hi)) throw std::invalid_argument("curve domain must satisfy a <= b");
    if (!eval_) throw std::invalid_argument("curve evaluator is empty");
    if (lipschitz_ && *lipschitz_ < 0.0) throw std::invalid_argument("negative Lipschitz bound");
    if (tail_ && *tail_ < 0.0) throw std::invalid_argument("negative tail bound");
    std::sort(breakpoints_.begin(), breakpoints_.end());
    breakpoints_.erase(std::unique(breakpoints_.begin(), breakpoints_.end()), breakpoints_.end());
    std::erase_if(breakpoints_, [&](double t) { return !(domain_.lo < t && t < domain_.hi); });
}

Vector Curve::operator()(double t) const
{
    if (!domain_.contains(t)) {
        std::ostringstream os;
        os.precision(17);
        os << "parameter " << t << " outside curve domain [" << domain_.lo << ", " << domain_.hi << "]";
        throw std::out_of_range(os.str());
    }
    return eval_(t);
}

Vector Curve::eval_clamped(double t) const { return eval_(std::clamp(t, domain_.lo, domain_.hi)); }

double Curve::dist(double s, double t) const { return distance(space_, (*this)(s), (*this)(t)); }

Vector eval(const Curve& curve, double t) { return curve(t); }

std::vector<double> breakpoints_within(const Curve& curve, double lo, double hi)
{
    const auto& bp = curve.breakpoints();
    auto first = std::upper_bound(bp.begin(), bp.end(), lo);
    auto last = std::lower_bound(bp.begin(), bp.end(), hi);
    if (first >= last) return {};
    return {first, last};
}

}  // namespace mdcurve
