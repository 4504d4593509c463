#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mdcurve/curve.hpp"
#include "mdcurve/spiral.hpp"

namespace mdcurve {

/// slow: alpha_n = pi/2 - (pi/4) / (1 + (n-1)/32), q_n = 1 - 0.5 / (1 + (n-1)/32).
/// dyadic: alpha_n = (pi/2)(1 - 2^-n), q_n = 1 - 2^-(n+1); underflows past depth 3.
enum class HatSchedule { slow, dyadic };

HatSchedule parse_hat_schedule(const std::string& name);
std::string to_string(HatSchedule s);
double schedule_alpha(HatSchedule s, int n);
double schedule_q(HatSchedule s, int n);

/// One level of the construction. Lengths refer to the rescaled spiral graph
/// Ft(X) = 2 F(X/2 + 1/2), whose top plateau is [-1, 1].
struct HatLevel {
    int n = 0;
    SpiralParams spiral;
    double x_flat = 0.0;        // Ft constant for |X| >= x_flat
    double x_join = 0.0;        // where the two spiral arcs meet
    double y_flat = 0.0;        // Ft(X) for |X| >= x_flat (negative)
    double graph_length = 0.0;  // length of the graph of Ft over [-x_flat, x_flat]
    double L = 0.0;             // 1.1 (x_flat + n graph_length)
    double a = 0.0;             // x_flat / L: G_n vanishes for |u| >= a
    double p = 0.0;             // graph_length / L: length of the graph of G_n
    double u_star = 0.0;        // spike half-width in G_n coordinates
    double peak = 0.0;          // G_n(0)
    double theta = 0.0;
};

/// alpha_n, q_n, b_n = choose_b and the derived constants; theta is left 0.
HatLevel build_hat_level(int n, HatSchedule schedule = HatSchedule::slow);

struct CantorPoint {
    std::vector<int> code;
    double x = 0.0;                // midpoint of I_len
    Interval bracket;              // I_len, width 2 theta_len
    std::vector<double> centers;   // rho_1 .. rho_len
    std::vector<Interval> chain;   // I_1 ⊃ I_2 ⊃ ... ⊃ I_len
};

/// The finite-depth hat function S_N on [-1, 1] and its interval families.
class HatCurve {
public:
    /// Builds levels 1..depth+1 (the extra level certifies the tail).
    /// Throws std::invalid_argument for depth < 1 and std::runtime_error when
    /// theta_N / L_N drops below 1e-13 (double precision cannot resolve it).
    explicit HatCurve(int depth, HatSchedule schedule = HatSchedule::slow);

    int depth() const { return depth_; }
    HatSchedule schedule() const { return schedule_; }
    const std::vector<HatLevel>& levels() const { return levels_; }
    const HatLevel& level(int n) const;

    /// G_n(u) = (Ft_n(L_n u) - Ft_n(L_n)) / L_n.
    double G(int n, double u) const;
    /// theta G_n((x - rho) / theta).
    double hat(int n, double rho, double theta, double x) const;
    /// S_n(x) for n <= depth; 0 outside [-1, 1].
    double S(double x, int n) const;
    double S(double x) const { return S(x, depth_); }
    double peak_value(int n) const;

    std::vector<double> hat_centers(int n) const;  // n <= depth + 1
    std::vector<Interval> family_G(int n) const;   // supports of level-n hats
    std::vector<Interval> family_F(int n) const;   // plateaus [rho - theta/L, rho + theta/L]

    /// Six per hat: rho ± theta a_n, rho ± theta x_join / L_n, rho ± theta / L_n.
    std::vector<double> breakpoints() const;
    /// x -> (x, S_N(x)) on [-1, 1] in the Euclidean plane.
    Curve graph_curve() const;

    /// 2 theta_{N+1} >= sum over k > N of theta_k, bounding |G - S_N|.
    double tail_bound() const;
    /// 2 + sum 2^n theta_n (p_n - 2 a_n): graph length of S_N over [-1, 1].
    double exact_length() const;
    /// 1 + sum 2^n theta_n p_n.
    double length_bound() const;

    /// Throws std::invalid_argument for an empty code, bits other than 0/1
    /// or a code longer than the depth.
    CantorPoint cantor_point(const std::vector<int>& code) const;
    /// (rho_n - theta_n u*_n, rho_n + theta_n u*_n) for the level-n hat of the code.
    std::pair<double, double> spike_pair(const std::vector<int>& code, int n) const;

private:
    int depth_;
    HatSchedule schedule_;
    std::vector<HatLevel> levels_;
    std::vector<SpiralGraph> graphs_;
};

/// psi_k(t) = (t + 2/k) / (1 - 2/k). Throws std::invalid_argument for k <= 2.
double psi(int k, double t);
/// max(psi_{n+1}(1/q), psi_{n+1}(psi_{n+1}(1)), psi_{n+1}(1 + 2/(n+1))).
double psi_case_bound(int n, double q);

void to_json(nlohmann::json& j, const HatLevel& l);
nlohmann::json hat_metadata(const HatCurve& h);

}  // namespace mdcurve
