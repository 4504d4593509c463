#pragma once

#include <vector>

#include <json.hpp>

#include "mdcurve/curve.hpp"

namespace mdcurve {

/// f(t) = (t_n f_n(t))_n with f_n(t) = (t, 0) for t <= q_n and
/// (q_n, 0) + (t - q_n)(1, 1)/sqrt(2) after, truncated to n <= n_max.
struct KinkExampleSpec {
    std::vector<double> weights;  // t_1 .. t_{n_max}
    std::vector<double> kinks;    // q_1 .. q_{n_max}
    double tail_mass = 0.0;       // sum over n > n_max of t_n^2

    std::size_t n_max() const { return weights.size(); }
    double tail_bound() const;    // sqrt(tail_mass)

    /// t_n^2 = 2^-n and kinks from the base-2 van der Corput sequence. With
    /// `renormalize` the truncated weights are rescaled to unit square sum and
    /// the tail is 0; otherwise the tail carries 2^-n_max.
    static KinkExampleSpec dyadic(int n_max, bool renormalize = true);
};

/// 1/2, 1/4, 3/4, 1/8, 5/8, ...
std::vector<double> van_der_corput(int count);

/// Throws std::invalid_argument unless sizes match, weights are >= 0, the
/// square sum plus tail equals 1 within 1e-12, and kinks are distinct in (0, 1).
void validate_kink_spec(const KinkExampleSpec& spec);

/// The curve on [0, 1] in the truncated l2 space of dimension 2 n_max.
Curve build_l2_kink_example(const KinkExampleSpec& spec);

/// ((2 + sqrt 2)/4 t_m^2 + sum over n != m of t_n^2 + tail)^{1/2}, m 1-based.
double c_m_bound(int m, const std::vector<double>& weights, double tail_mass = 0.0);

void to_json(nlohmann::json& j, const KinkExampleSpec& s);
void from_json(const nlohmann::json& j, KinkExampleSpec& s);

}  // namespace mdcurve
