#include "mdcurve/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "mdcurve/box_curve.hpp"
#include "mdcurve/closed_set.hpp"
#include "mdcurve/defect.hpp"
#include "mdcurve/derived_numbers.hpp"
#include "mdcurve/hat_curve.hpp"
#include "mdcurve/kink_example.hpp"
#include "mdcurve/porosity.hpp"
#include "mdcurve/reparam.hpp"
#include "mdcurve/spiral.hpp"
#include "mdcurve/standard_curves.hpp"
#include "mdcurve/variation.hpp"

namespace mdcurve {

namespace {

std::string num(double v)
{
    std::ostringstream s;
    s.precision(17);
    s << v;
    return s.str();
}

double arg_from_half(const Curve& g, double t)
{
    const Vector p = g(t), c = g(0.5);
    return std::atan2(p[1] - c[1], p[0] - c[0]);
}

nlohmann::json spec_or(const SuiteOptions& o, nlohmann::json fallback)
{
    if (o.spec) fallback.update(*o.spec);
    return fallback;
}

// ---------------------------------------------------------------- spiral

void spiral_suite(VerificationReport& r, const SuiteOptions& o)
{
    const nlohmann::json spec = spec_or(o, {{"q", 0.9}, {"alpha", 1.0}, {"b", 2.5}});
    const double q = spec.at("q"), alpha = spec.at("alpha"), b = spec.at("b");
    const SpiralConstraints c = spiral_constraints(q, alpha, b);
    r.flag("constraint_k", "k = b/sqrt(b^2+1) exceeds q", c.k_exceeds_q);
    r.flag("constraint_tangent", "tan(alpha) < b", c.tangent_descends);
    r.flag("constraint_second", "k - k(1-k)/(e^{b alpha}-1) exceeds q", c.second_bound);
    r.flag("constraint_graph", "b sin(alpha) > cos(alpha)", c.graph_condition);
    const SpiralParams p = make_spiral_params(q, alpha, b);
    const SpiralCurve s(p);
    const Curve g = s.curve();

    const Vector g0 = g(0.0), g1 = g(1.0);
    r.at_most("horizontal_start", "g(0) = 0 and g(1) = 1", std::hypot(g0[0], g0[1]) + std::hypot(g1[0] - 1.0, g1[1]), 1e-15);
    double jump = 0.0;
    for (double t : s.joints()) jump = std::max(jump, g.dist(t - 1e-13, t + 1e-13));
    r.at_most("joint_continuity", "pieces meet continuously", jump, 1e-10);

    r.flag("t_star_bracket", "t_star lies in (1/2, 1/2 + s0)", p.t_star > 0.5 && p.t_star < 0.5 + p.s0,
           "t_star=" + num(p.t_star) + " s0=" + num(p.s0));
    r.at_most("t_star_argument", "arg(g(1/2 + t_star) - g(1/2)) = -alpha",
              std::abs(arg_from_half(g, 0.5 + p.t_star) + alpha), 1e-6);

    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> us(0.0, 1.0), ut(g.a(), g.b()), near(-1e-3, 1e-3);
    double worst = INFINITY, ws = 0.0, wt = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const double sv = us(rng);
        const double tv = i % 4 == 0 ? std::clamp(sv + near(rng), g.a(), g.b()) : ut(rng);
        if (tv == sv) continue;
        const double ratio = g.dist(sv, tv) / std::abs(tv - sv);
        if (ratio < worst) {
            worst = ratio;
            ws = sv;
            wt = tv;
        }
    }
    r.at_least("pair_ratio", "|g(t) - g(s)| / |t - s| > q for s in [0,1]", worst, q,
               "1e5 pairs, worst at s=" + num(ws) + " t=" + num(wt));

    const RatioBoundReport rb = spiral_ratio_bound_check(p);
    r.at_most("ratio_bound", "t / |f(t) - f(0)| <= 1/k", rb.max_ratio, rb.bound + 1e-9, "argmax t=" + num(rb.argmax));

    double speed = 0.0;
    for (int i = 0; i < 8; ++i) {
        double a = ut(rng), bb = ut(rng);
        if (a > bb) std::swap(a, bb);
        speed = std::max(speed, std::abs(variation(g, a, bb, 16).value - (bb - a)));
    }
    r.at_most("unit_speed", "arc-length parameterization", speed, 1e-6);
}

// ---------------------------------------------------------------- box

void box_suite(VerificationReport& r, const SuiteOptions& o)
{
    const nlohmann::json spec = spec_or(o, {{"alpha", std::numbers::pi / 4}});
    const double alpha = spec.at("alpha");
    const double h = 0.5 * std::tan(alpha);
    const Curve g = build_box_curve(alpha);
    if (std::abs(alpha - std::numbers::pi / 4) < 1e-15) {
        const Vector v = g(1.5);
        r.at_most("formula_point", "g(1.5) = 1 - 0.5 i for h = 1/2", std::hypot(v[0] - 1.0, v[1] + 0.5), 1e-15);
    }
    std::vector<double> ts;
    for (int i = 0; i <= 4000; ++i) ts.push_back(g.a() + (g.b() - g.a()) * i / 4000.0);
    double worst = INFINITY;
    for (int i = 0; i <= 256; ++i) {
        const double s = i / 256.0;
        for (double t : ts)
            if (t != s) worst = std::min(worst, g.dist(s, t) / std::abs(t - s));
    }
    r.at_most("l1_ratio", "l1 chord ratio equals 1 for s in [0,1]", std::abs(worst - 1.0), 1e-12,
              "min ratio " + num(worst));
    r.at_most("spike_angle", "arg(g(1 + h) - g(1/2)) = -alpha", std::abs(arg_from_half(g, 1.0 + h) + alpha), 1e-12);
}

// ---------------------------------------------------------------- hat

void hat_suite(VerificationReport& r, const SuiteOptions& o)
{
    const nlohmann::json spec = spec_or(o, {{"depth", 6}, {"schedule", "slow"}});
    const int N = o.depth > 0 ? o.depth : spec.at("depth").get<int>();
    const HatCurve h(N, parse_hat_schedule(spec.at("schedule")));

    bool theta_ok = h.level(1).theta < 0.5;
    double theta_sum = 0.0;
    for (int n = 1; n <= N; ++n) {
        const HatLevel& l = h.level(n);
        const HatLevel& next = h.level(n + 1);
        theta_sum += l.theta;
        theta_ok = theta_ok && next.theta * next.p < l.theta * l.p / 4.0 && 2.0 * next.theta < l.theta / l.L &&
                   l.L - l.x_flat > n * l.graph_length && l.p < 1.0 / n;
    }
    r.flag("theta_conditions", "theta and L_n conditions of the construction", theta_ok && theta_sum < 1.0);

    r.at_most("total_length", "graph length bounded by 5", h.exact_length(), 5.0,
              "exact 2 + sum 2^n theta_n (p_n - 2 a_n); 1 + sum 2^n theta_n p_n = " + num(h.length_bound()));
    const Curve graph = h.graph_curve();
    const double refined = variation(graph, -1.0, 1.0, 13).value;
    r.at_most("length_refinement", "refined graph length matches the closed form",
              std::abs(refined - h.exact_length()) / h.exact_length(), 1e-6, "refined " + num(refined));

    // md at points with finitely many hats nearby, on the arc-length curve
    const auto [g, v] = arc_length_reparameterize(graph);
    std::vector<double> gbp = g.breakpoints();
    std::sort(gbp.begin(), gbp.end());
    const auto exclude = h.family_G(std::min(5, N));
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> ux(-1.0, 1.0);
    double md_err = 0.0;
    bool all_exist = true;
    int found = 0;
    for (int tries = 0; found < 20 && tries < 100000; ++tries) {
        const double x = ux(rng);
        if (std::any_of(exclude.begin(), exclude.end(), [x](const Interval& i) { return i.contains(x); })) continue;
        const double s = v(x);
        const auto it = std::lower_bound(gbp.begin(), gbp.end(), s);
        double d = std::min(s - g.a(), g.b() - s);
        if (it != gbp.end()) d = std::min(d, *it - s);
        if (it != gbp.begin()) d = std::min(d, s - *std::prev(it));
        const double t0 = std::min(1e-3, 0.25 * d);
        if (t0 < 1e-9) continue;
        ++found;
        const MetricDerivativeResult md = metric_derivative_detail(g, s, Ladder{t0, 0.5, 12}, 1e-2);
        all_exist = all_exist && md.exists;
        md_err = std::max(md_err, std::abs(md.value - 1.0));
    }
    r.flag("md_points_found", "20 sample points off the level-5 supports", found == 20, num(found) + " points");
    r.flag("md_exists_off_cantor", "md exists at points with finitely many hats", all_exist);
    r.at_most("md_equals_one", "md = 1 on the arc-length curve", md_err, 0.05);

    // Cantor codes: spikes and the chord/arc bound
    std::bernoulli_distribution bit(0.5);
    double spike_margin = -INFINITY, psi_margin = -INFINITY, porosity_min = INFINITY;
    std::string spike_detail, psi_detail;
    bool spikes_decrease = true;
    for (int c = 0; c < 5; ++c) {
        std::vector<int> code;
        for (int i = 0; i < N; ++i) code.push_back(bit(rng) ? 1 : 0);
        const CantorPoint cp = h.cantor_point(code);
        double prev_ratio = INFINITY;
        for (int n = 2; n <= std::min(5, N - 1); ++n) {
            const auto yz = h.spike_pair(code, n);
            const double ratio = chord_arc_ratios(graph, {yz}, 10).ratio[0];
            const double bound = std::cos(h.level(n).spiral.alpha) + 0.05;
            if (ratio - bound > spike_margin) {
                spike_margin = ratio - bound;
                spike_detail = "worst level " + num(n) + " ratio " + num(ratio) + " bound " + num(bound);
            }
            spikes_decrease = spikes_decrease && ratio < prev_ratio;
            prev_ratio = ratio;

            const double end = cp.chain[n - 1].hi;
            const double chord_arc = chord_arc_ratios(graph, {{cp.x, end}}, 10).ratio[0];
            const double psib = psi_case_bound(n, h.level(n + 1).spiral.q);
            if (1.0 / chord_arc - psib > psi_margin) {
                psi_margin = 1.0 / chord_arc - psib;
                psi_detail = "worst level " + num(n) + " arc/chord " + num(1.0 / chord_arc) + " bound " + num(psib);
            }
        }
        ClosedSet cover;
        cover.intervals = h.family_G(N);
        std::vector<double> scales;
        for (int n = 1; n < N; ++n) scales.push_back(h.level(n).theta);
        porosity_min = std::min(porosity_min, symmetric_porosity_lower_bound(cover, cp.x, scales).bound);
    }
    if (N >= 3) {
        r.at_most("spike_ratio", "chord/arc across the level-n spike <= cos(alpha_n) + 0.05", spike_margin, 0.0, spike_detail);
        r.flag("spike_ratio_decreasing", "spike chord/arc ratios decrease with n", spikes_decrease);
        r.at_most("cantor_arc_chord", "arc/chord at Cantor points within the psi case bound", psi_margin, 0.0, psi_detail);
    }
    if (N >= 2) r.above("cantor_porosity", "Cantor points are symmetrically porous", porosity_min, 0.0);
}

// ---------------------------------------------------------------- kink

void kink_suite(VerificationReport& r, const SuiteOptions& o)
{
    const nlohmann::json spec = spec_or(o, {{"n_max", 20}, {"renormalize", true}});
    const KinkExampleSpec k = spec.get<KinkExampleSpec>();
    const Curve f = build_l2_kink_example(k);
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double lip = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double s = u(rng), t = u(rng);
        if (s != t) lip = std::max(lip, f.dist(s, t) / std::abs(s - t));
    }
    r.at_most("lipschitz", "f is 1-Lipschitz", lip, 1.0 + 1e-9);

    const double floor = 1.0 - 2.0 * k.tail_bound() - 0.02;
    double worst = INFINITY;
    int tested = 0;
    std::uniform_real_distribution<double> inner(0.01, 0.99);
    while (tested < 50) {
        const double x = inner(rng);
        double gap = 1.0;
        for (double q : k.kinks) gap = std::min(gap, std::abs(x - q));
        if (gap < 2e-3) continue;
        ++tested;
        const auto md = metric_derivative(f, x, Ladder{1e-3, 0.5, 16});
        worst = std::min(worst, md ? *md : 0.0);
    }
    r.at_least("md_off_kinks", "md >= 1 - 2 eps away from the kinks", worst, floor, "50 points");

    const double c1 = c_m_bound(1, k.weights, k.tail_mass);
    r.above("c1_below_one", "C_1 < 1", 1.0 - c1, 0.0, "C_1 = " + num(c1));
    const double q1 = k.kinks[0];
    double ratio = 0.0;
    for (int j = 4; j <= 30; ++j) {
        const double d = std::ldexp(1.0, -j);
        if (q1 - d >= 0.0 && q1 + d <= 1.0) ratio = std::max(ratio, f.dist(q1 - d, q1 + d) / (2.0 * d));
    }
    r.at_most("symmetric_chord_at_kink", "symmetric chord ratio at q_1 <= C_1", ratio, c1 + 0.01);
}

// ---------------------------------------------------------------- reparam

void reparam_suite(VerificationReport& r, const SuiteOptions& o)
{
    const Curve pl = curves::plateau();
    const ReparamPlan plan = phi_reparam(pl);
    r.at_most("phi_total", "phi(1) = v_f(1) + |U| = 1", std::abs(plan.phi(1.0) - 1.0), 1e-9);
    const Homeomorphism phi = plan.phi;
    const Curve g(phi.range, pl.space(), [pl, phi](double s) { return pl.eval_clamped(phi.inverse(s)); });
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> us(phi.range.lo, phi.range.hi);
    double lip = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double s = us(rng), t = us(rng);
        if (s != t) lip = std::max(lip, g.dist(s, t) / std::abs(s - t));
    }
    r.at_most("phi_lipschitz", "f o phi^{-1} is 1-Lipschitz", lip, 1.0 + 1e-6);

    const Homeomorphism z = zahorski_homeomorphism(ClosedSet{{0.5}, {}}, {0.0, 1.0});
    r.at_most("zahorski_flat", "h' vanishes on M", z.derivative(0.5), 1e-6);
    r.at_most("zahorski_slope", "h'(0) = 2 for M = {1/2}", std::abs(z.derivative(0.0) - 2.0), 1e-6);

    // variation equals the integral of md (Simpson on md estimates)
    const Curve pa = curves::parabola();
    auto md = [&pa](double x) {
        const auto m = metric_derivative(pa, x, Ladder{1e-4, 0.5, 12}, 1e-2);
        return m ? *m : NAN;
    };
    double worst = 0.0;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int pairs = 0; pairs < 20;) {
        double s = unit(rng), t = unit(rng);
        if (s > t) std::swap(s, t);
        if (t - s < 1e-3) continue;
        ++pairs;
        const int n = 64;
        double sum = md(s) + md(t);
        for (int k = 1; k < n; ++k) sum += (k % 2 ? 4.0 : 2.0) * md(s + (t - s) * k / n);
        const double integral = sum * (t - s) / (3.0 * n);
        const double var = variation(pa, s, t, 14).value;
        worst = std::max(worst, std::abs(var - integral) / var);
    }
    r.at_most("variation_is_integral_of_md", "variation equals the integral of md", worst, 1e-5, "20 pairs");

    const auto [ga, va] = arc_length_reparameterize(pa);
    double speed = 0.0;
    for (int i = 0; i < 5; ++i) {
        double s = us(rng) * ga.b() / phi.range.hi, t = us(rng) * ga.b() / phi.range.hi;
        if (s > t) std::swap(s, t);
        speed = std::max(speed, std::abs(variation(ga, s, t, 12).value - (t - s)));
    }
    r.at_most("arc_length_unit_speed", "f o v_f^{-1} has unit speed", speed, 1e-6);
}

// ---------------------------------------------------------------- porosity

void porosity_suite(VerificationReport& r, const SuiteOptions& o)
{
    ClosedSet m;
    m.points.push_back(0.0);
    for (int n = 1; n <= 60; ++n) {
        m.points.push_back(std::ldexp(1.0, -n));
        m.points.push_back(-std::ldexp(1.0, -n));
    }
    std::vector<double> scales;
    for (int n = 1; n <= 40; ++n) scales.push_back(std::ldexp(1.0, -n));
    const GapStructure gs = symmetric_porosity_lower_bound(m, 0.0, scales);
    r.at_least("dyadic_points", "{0} and ±2^-n are symmetrically porous at 0", gs.bound, 0.5 - 1e-9);
    bool certified = true;
    for (const GapRecord& g : gs.gaps) certified = certified && certify_gap(m, 0.0, g, true);
    r.flag("gaps_certified", "every reported gap avoids the set", certified);

    const int N = o.depth > 0 ? o.depth : 5;
    const HatCurve h(N);
    ClosedSet cover;
    cover.intervals = h.family_G(N);
    std::vector<double> hs;
    for (int n = 1; n < N; ++n) hs.push_back(h.level(n).theta);
    std::mt19937_64 rng(o.seed);
    std::bernoulli_distribution bit(0.5);
    double worst = INFINITY;
    for (int c = 0; c < 5; ++c) {
        std::vector<int> code;
        for (int i = 0; i < N; ++i) code.push_back(bit(rng) ? 1 : 0);
        worst = std::min(worst, symmetric_porosity_lower_bound(cover, h.cantor_point(code).x, hs).bound);
    }
    r.above("hat_cantor_points", "Cantor points of the hat curve are symmetrically porous", worst, 0.0);
}

}  // namespace

bool VerificationReport::pass() const
{
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

void VerificationReport::at_most(std::string id, std::string anchor, double measured, double threshold, std::string detail)
{
    checks.push_back({std::move(id), std::move(anchor), measured, threshold, "<=", measured <= threshold, std::move(detail)});
}

void VerificationReport::at_least(std::string id, std::string anchor, double measured, double threshold, std::string detail)
{
    checks.push_back({std::move(id), std::move(anchor), measured, threshold, ">=", measured >= threshold, std::move(detail)});
}

void VerificationReport::above(std::string id, std::string anchor, double measured, double threshold, std::string detail)
{
    checks.push_back({std::move(id), std::move(anchor), measured, threshold, ">", measured > threshold, std::move(detail)});
}

void VerificationReport::flag(std::string id, std::string anchor, bool ok, std::string detail)
{
    checks.push_back({std::move(id), std::move(anchor), ok ? 1.0 : 0.0, 1.0, "ok", ok, std::move(detail)});
}

std::vector<std::string> suite_names() { return {"spiral", "box", "hat", "kink", "reparam", "porosity"}; }

VerificationReport run_suite(const std::string& name, const SuiteOptions& options)
{
    void (*suite)(VerificationReport&, const SuiteOptions&) = nullptr;
    if (name == "spiral") suite = spiral_suite;
    else if (name == "box") suite = box_suite;
    else if (name == "hat") suite = hat_suite;
    else if (name == "kink") suite = kink_suite;
    else if (name == "reparam") suite = reparam_suite;
    else if (name == "porosity") suite = porosity_suite;
    else throw std::invalid_argument("unknown suite '" + name + "'");

    VerificationReport r;
    r.suite = name;
    const auto start = std::chrono::steady_clock::now();
    try {
        suite(r, options);
    } catch (const std::exception& e) {
        r.flag("build", "suite inputs build and evaluate", false, e.what());
    }
    r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

nlohmann::json report_json(const VerificationReport& r, bool include_wall_time)
{
    auto number = [](double v) -> nlohmann::json {
        if (std::isnan(v)) return "nan";
        if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
        return v;
    };
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : r.checks)
        checks.push_back({{"id", c.id},
                          {"anchor", c.anchor},
                          {"measured", number(c.measured)},
                          {"threshold", number(c.threshold)},
                          {"comparison", c.comparison},
                          {"pass", c.pass},
                          {"detail", c.detail}});
    nlohmann::json j{{"suite", r.suite}, {"checks", checks}, {"pass", r.pass()}};
    if (include_wall_time) j["wall_time_s"] = r.wall_time;
    return j;
}

}  // namespace mdcurve
