#include "mdcurve/kink_example.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mdcurve {

double KinkExampleSpec::tail_bound() const { return std::sqrt(tail_mass); }

KinkExampleSpec KinkExampleSpec::dyadic(int n_max, bool renormalize)
{
    if (n_max < 1) throw std::invalid_argument("kink example needs n_max >= 1");
    KinkExampleSpec s;
    double sum = 0.0;
    for (int n = 1; n <= n_max; ++n) sum += std::ldexp(1.0, -n);
    const double scale = renormalize ? 1.0 / sum : 1.0;
    for (int n = 1; n <= n_max; ++n) s.weights.push_back(std::sqrt(std::ldexp(1.0, -n) * scale));
    s.kinks = van_der_corput(n_max);
    s.tail_mass = renormalize ? 0.0 : std::ldexp(1.0, -n_max);
    return s;
}

std::vector<double> van_der_corput(int count)
{
    std::vector<double> out;
    for (int i = 1; i <= count; ++i) {
        double v = 0.0, f = 0.5;
        for (int k = i; k > 0; k >>= 1, f *= 0.5)
            if (k & 1) v += f;
        out.push_back(v);
    }
    return out;
}

void validate_kink_spec(const KinkExampleSpec& spec)
{
    if (spec.weights.empty()) throw std::invalid_argument("kink example: no weights");
    if (spec.weights.size() != spec.kinks.size()) throw std::invalid_argument("kink example: weights and kinks differ in length");
    if (!(spec.tail_mass >= 0.0)) throw std::invalid_argument("kink example: negative tail mass");
    double sum = spec.tail_mass;
    for (double w : spec.weights) {
        if (!(w >= 0.0)) throw std::invalid_argument("kink example: negative weight");
        sum += w * w;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("kink example: weights not normalized (sum of squares plus tail = " +
                                    std::to_string(sum) + ")");
    std::vector<double> q = spec.kinks;
    for (double v : q)
        if (!(v > 0.0 && v < 1.0)) throw std::invalid_argument("kink example: kink locations must lie in (0,1)");
    std::sort(q.begin(), q.end());
    if (std::adjacent_find(q.begin(), q.end()) != q.end()) throw std::invalid_argument("kink example: repeated kink location");
}

Curve build_l2_kink_example(const KinkExampleSpec& spec)
{
    validate_kink_spec(spec);
    const std::size_t n = spec.n_max();
    auto w = spec.weights;
    auto q = spec.kinks;
    return Curve({0.0, 1.0}, NormSpec::l2_truncated(2 * n),
                 [w, q](double t) {
                     Vector v(2 * w.size());
                     for (std::size_t i = 0; i < w.size(); ++i) {
                         if (t <= q[i]) {
                             v[2 * i] = w[i] * t;
                         } else {
                             const double d = (t - q[i]) / std::numbers::sqrt2;
                             v[2 * i] = w[i] * (q[i] + d);
                             v[2 * i + 1] = w[i] * d;
                         }
                     }
                     return v;
                 },
                 spec.kinks, 1.0, spec.tail_bound());
}

double c_m_bound(int m, const std::vector<double>& weights, double tail_mass)
{
    if (m < 1 || m > static_cast<int>(weights.size())) throw std::out_of_range("c_m_bound: m out of range");
    double s = tail_mass;
    for (std::size_t n = 0; n < weights.size(); ++n) {
        const double w2 = weights[n] * weights[n];
        s += static_cast<int>(n) + 1 == m ? (2.0 + std::numbers::sqrt2) / 4.0 * w2 : w2;
    }
    return std::sqrt(s);
}

void to_json(nlohmann::json& j, const KinkExampleSpec& s)
{
    j = nlohmann::json{{"type", "kink"}, {"weights", s.weights}, {"kinks", s.kinks}, {"tail_mass", s.tail_mass},
                       {"tail_bound", s.tail_bound()}};
}

void from_json(const nlohmann::json& j, KinkExampleSpec& s)
{
    if (j.contains("weights")) {
        s.weights = j.at("weights").get<std::vector<double>>();
        s.kinks = j.contains("kinks") ? j.at("kinks").get<std::vector<double>>()
                                      : van_der_corput(static_cast<int>(s.weights.size()));
        s.tail_mass = j.value("tail_mass", 0.0);
    } else {
        s = KinkExampleSpec::dyadic(j.value("n_max", 20), j.value("renormalize", true));
    }
}

}  // namespace mdcurve
