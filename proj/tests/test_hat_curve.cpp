#include <doctest.h>

#include <cmath>
#include <random>

#include "mdcurve/hat_curve.hpp"
#include "mdcurve/variation.hpp"

using namespace mdcurve;

namespace {

const HatCurve& depth6()
{
    static const HatCurve h(6);
    return h;
}

bool disjoint_sorted(const std::vector<Interval>& v)
{
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i - 1].hi < v[i].lo)) return false;
    return true;
}

}  // namespace

TEST_CASE("schedules")
{
    for (HatSchedule s : {HatSchedule::slow, HatSchedule::dyadic})
        for (int n = 1; n < 12; ++n) {
            CHECK(schedule_alpha(s, n) < schedule_alpha(s, n + 1));
            CHECK(schedule_q(s, n) < schedule_q(s, n + 1));
            CHECK(schedule_alpha(s, n) < std::numbers::pi / 2);
            CHECK(schedule_q(s, n) < 1.0);
        }
    CHECK(schedule_alpha(HatSchedule::dyadic, 1) == doctest::Approx(std::numbers::pi / 4));
    CHECK(schedule_q(HatSchedule::dyadic, 1) == 0.75);
    CHECK(parse_hat_schedule("dyadic") == HatSchedule::dyadic);
    CHECK_THROWS(parse_hat_schedule("fast"));
}

TEST_CASE("hat level profile")
{
    const HatCurve& h = depth6();
    for (int n = 1; n <= 3; ++n) {
        const HatLevel& l = h.level(n);
        CHECK(h.G(n, 1.2) == 0.0);
        CHECK(h.G(n, -1.0) == 0.0);
        CHECK(h.G(n, l.a) == 0.0);
        CHECK(h.G(n, 0.0) < 1.0);
        CHECK(h.G(n, 0.0) == doctest::Approx(l.peak));
        // plateau exactly [-1/L, 1/L]
        CHECK(h.G(n, 0.999 / l.L) == h.G(n, 0.0));
        CHECK(h.G(n, 1.001 / l.L) < h.G(n, 0.0));
        std::mt19937_64 rng(n);
        std::uniform_real_distribution<double> u(-1.5, 1.5);
        for (int i = 0; i < 500; ++i) {
            const double x = u(rng);
            CHECK(h.G(n, x) == h.G(n, -x));
            CHECK(h.G(n, x) >= 0.0);
        }
        // L_n - x_n > n H^1(graph of F_n)
        CHECK(l.L - l.x_flat > n * l.graph_length);
    }
}

TEST_CASE("hat level graph length by refinement")
{
    const HatCurve& h = depth6();
    for (int n = 1; n <= 4; ++n) {
        const HatLevel& l = h.level(n);
        const Curve c({-l.a, l.a}, NormSpec::euclidean2d(), [&h, n](double u) { return Vector{u, h.G(n, u)}; },
                      {-l.x_join / l.L, -1.0 / l.L, 1.0 / l.L, l.x_join / l.L});
        const VariationResult v = variation(c, -l.a, l.a, 14);
        CHECK(v.value <= l.p * (1.0 + 1e-12));
        CHECK(v.value == doctest::Approx(l.p).epsilon(1e-6));
        CHECK(v.value < 1.0 / n);
    }
}

TEST_CASE("theta conditions and interval families")
{
    const HatCurve& h = depth6();
    CHECK(h.level(1).theta < 0.5);
    double sum = 0.0;
    for (int n = 1; n <= 6; ++n) {
        const HatLevel& l = h.level(n);
        const HatLevel& next = h.level(n + 1);
        sum += l.theta;
        CHECK(next.theta * next.p < l.theta * l.p / 4.0);
        CHECK(2.0 * next.theta < l.theta / l.L);

        const auto F = h.family_F(n);
        const auto G = h.family_G(n);
        CHECK(F.size() == std::size_t(1) << n);
        CHECK(G.size() == F.size());
        CHECK(disjoint_sorted(F));
        CHECK(disjoint_sorted(G));
        for (std::size_t i = 0; i < F.size(); ++i) {
            CHECK(F[i].length() == doctest::Approx(2.0 * l.theta / l.L));
            CHECK(G[i].length() == doctest::Approx(2.0 * l.theta));
            CHECK(G[i].lo <= F[i].lo);
            CHECK(F[i].hi <= G[i].hi);
        }
        // children sit at the two ends of each parent plateau
        const auto child = h.family_G(n + 1);
        for (std::size_t i = 0; i < F.size(); ++i) {
            CHECK(child[2 * i].lo == doctest::Approx(F[i].lo).epsilon(1e-15));
            CHECK(child[2 * i + 1].hi == doctest::Approx(F[i].hi).epsilon(1e-15));
        }
    }
    CHECK(sum < 1.0);
    const auto F2 = h.family_F(2);
    CHECK(F2.size() == 4);
    CHECK(h.breakpoints().size() == 756);
}

TEST_CASE("S_1 has two hats centred at ±(1 - theta_1)")
{
    const HatCurve& h = depth6();
    const double t1 = h.level(1).theta;
    const auto c = h.hat_centers(1);
    REQUIRE(c.size() == 2);
    CHECK(c[0] == doctest::Approx(-1.0 + t1));
    CHECK(c[1] == doctest::Approx(1.0 - t1));
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 300; ++i) {
        const double x = u(rng);
        const double direct = h.hat(1, c[0], t1, x) + h.hat(1, c[1], t1, x);
        CHECK(h.S(x, 1) == direct);
    }
}

TEST_CASE("S_n is monotone in n and tops out on the plateaus")
{
    const HatCurve& h = depth6();
    std::mt19937_64 rng(8);
    for (int n = 1; n < 6; ++n) {
        const double top = h.peak_value(n);
        const auto F = h.family_F(n);
        const auto G = h.family_G(n);
        std::uniform_real_distribution<double> pick(0.0, 1.0);
        for (int i = 0; i < 200; ++i) {
            const Interval& g = G[i % G.size()];
            const double x = g.lo + pick(rng) * g.length();
            CHECK(h.S(x, n) <= h.S(x, n + 1));
            const bool on_plateau = F[i % F.size()].contains(x);
            if (on_plateau) CHECK(h.S(x, n) == doctest::Approx(top).epsilon(1e-14));
            else CHECK(h.S(x, n) < top);
        }
        for (const Interval& f : F) CHECK(h.S(0.5 * (f.lo + f.hi), n) == doctest::Approx(top).epsilon(1e-14));
    }
}

TEST_CASE("tail certificate")
{
    const HatCurve& h = depth6();
    CHECK(h.tail_bound() == 2.0 * h.level(7).theta);
    // |S_m - S_N| <= sum over m < k <= N of theta_k
    std::mt19937_64 rng(4);
    for (int m = 1; m < 6; ++m) {
        double bound = 0.0;
        for (int k = m + 1; k <= 6; ++k) bound += h.level(k).theta;
        for (const Interval& g : h.family_G(6)) {
            std::uniform_real_distribution<double> u(g.lo, g.hi);
            const double x = u(rng);
            CHECK(std::abs(h.S(x) - h.S(x, m)) <= bound);
        }
    }
}

TEST_CASE("cantor points")
{
    const HatCurve& h = depth6();
    const double t1 = h.level(1).theta;
    const CantorPoint z = h.cantor_point({0});
    CHECK(z.x >= -1.0);
    CHECK(z.x <= -1.0 + 2.0 * t1);
    CHECK(z.bracket.lo == doctest::Approx(-1.0));
    const std::vector<int> code{1, 0, 0, 1, 1, 0};
    const CantorPoint c = h.cantor_point(code);
    for (std::size_t n = 0; n < code.size(); ++n) {
        CHECK(c.chain[n].length() == doctest::Approx(2.0 * h.level(static_cast<int>(n) + 1).theta));
        if (n > 0) {
            CHECK(c.chain[n].lo >= c.chain[n - 1].lo);
            CHECK(c.chain[n].hi <= c.chain[n - 1].hi);
        }
        // I_n is a member of G_n
        const auto G = h.family_G(static_cast<int>(n) + 1);
        bool member = false;
        for (const Interval& g : G) member = member || (g.lo == c.chain[n].lo && g.hi == c.chain[n].hi);
        CHECK(member);
    }
    const CantorPoint prefix = h.cantor_point({1, 0, 0});
    CHECK(prefix.bracket.lo <= c.bracket.lo);
    CHECK(c.bracket.hi <= prefix.bracket.hi);
    CHECK_THROWS_AS(h.cantor_point({0, 1, 0, 1, 0, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(h.cantor_point({2}), std::invalid_argument);
    CHECK_THROWS_AS(h.cantor_point({}), std::invalid_argument);
}

TEST_CASE("psi")
{
    CHECK(psi(4, 1.0) == doctest::Approx(3.0));
    CHECK(psi(100, 1.0) == doctest::Approx(1.02 / 0.98));
    CHECK(psi(100000, 1.0) == doctest::Approx(1.0).epsilon(1e-4));
    for (double t : {1.0, 1.5, 3.0}) CHECK(psi(7, t) >= t);
    CHECK_THROWS_AS(psi(2, 1.0), std::invalid_argument);
    CHECK(psi_case_bound(3, 0.6) == doctest::Approx(std::max({psi(4, 1.0 / 0.6), psi(4, 3.0), psi(4, 1.5)})));
}

TEST_CASE("graph length")
{
    const HatCurve h(3);
    const Curve g = h.graph_curve();
    const VariationResult v = variation(g, -1.0, 1.0, 12);
    CHECK(v.value == doctest::Approx(h.exact_length()).epsilon(1e-6));
    CHECK(depth6().exact_length() <= 5.0);
    CHECK(depth6().length_bound() < 5.0);
    CHECK(g.tail_bound().has_value());
}

TEST_CASE("spike pairs")
{
    const HatCurve& h = depth6();
    const std::vector<int> code{0, 1, 1, 0, 1, 0};
    const CantorPoint c = h.cantor_point(code);
    for (int n = 1; n <= 5; ++n) {
        const auto [y, z] = h.spike_pair(code, n);
        CHECK(y < c.x);
        CHECK(c.x < z);
        CHECK(z - y < 2.0 * h.level(n).theta);
    }
}

TEST_CASE("depth limits")
{
    CHECK_THROWS_AS(HatCurve(0), std::invalid_argument);
    CHECK_NOTHROW(HatCurve(3, HatSchedule::dyadic));
    CHECK_THROWS_AS(HatCurve(4, HatSchedule::dyadic), std::runtime_error);
    const nlohmann::json meta = hat_metadata(HatCurve(2));
    CHECK(meta["levels"].size() == 3);
    CHECK(meta["schedule"] == "slow");
    CHECK(meta["levels"][0]["theta"] == 0.4);
}
