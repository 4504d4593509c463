#include <doctest.h>

#include <cmath>
#include <random>

#include "mdcurve/derived_numbers.hpp"
#include "mdcurve/kink_example.hpp"

using namespace mdcurve;

TEST_CASE("van der Corput kinks")
{
    const auto v = van_der_corput(7);
    const std::vector<double> expect{0.5, 0.25, 0.75, 0.125, 0.625, 0.375, 0.875};
    CHECK(v == expect);
}

TEST_CASE("kink spec validation")
{
    const KinkExampleSpec d = KinkExampleSpec::dyadic(20);
    CHECK_NOTHROW(validate_kink_spec(d));
    CHECK(d.tail_mass == 0.0);
    const KinkExampleSpec raw = KinkExampleSpec::dyadic(20, false);
    CHECK_NOTHROW(validate_kink_spec(raw));
    CHECK(raw.tail_bound() == doctest::Approx(std::ldexp(1.0, -10)));

    KinkExampleSpec bad = d;
    bad.weights[0] *= 1.01;
    CHECK_THROWS_AS(build_l2_kink_example(bad), std::invalid_argument);
    bad = d;
    bad.kinks[3] = bad.kinks[0];
    CHECK_THROWS_AS(build_l2_kink_example(bad), std::invalid_argument);
    bad = d;
    bad.kinks[1] = 1.0;
    CHECK_THROWS_AS(build_l2_kink_example(bad), std::invalid_argument);

    nlohmann::json j = d;
    KinkExampleSpec back = j.get<KinkExampleSpec>();
    CHECK(back.weights == d.weights);
    CHECK(back.kinks == d.kinks);
}

TEST_CASE("kink curve is 1-Lipschitz and starts at the origin")
{
    const Curve f = build_l2_kink_example(KinkExampleSpec::dyadic(20));
    CHECK(f.space().dimension() == 40);
    for (double c : f(0.0)) CHECK(c == 0.0);
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 5000; ++i) {
        const double s = u(rng), t = u(rng);
        CHECK(f.dist(s, t) <= std::abs(s - t) * (1.0 + 1e-9));
    }
}

TEST_CASE("md is 1 away from the kinks")
{
    for (bool renorm : {true, false}) {
        const KinkExampleSpec spec = KinkExampleSpec::dyadic(20, renorm);
        const Curve f = build_l2_kink_example(spec);
        std::mt19937_64 rng(6);
        std::uniform_real_distribution<double> u(0.01, 0.99);
        int tested = 0;
        while (tested < 50) {
            const double x = u(rng);
            double gap = 1.0;
            for (double q : spec.kinks) gap = std::min(gap, std::abs(x - q));
            if (gap < 2e-3) continue;
            ++tested;
            const auto md = metric_derivative(f, x, Ladder{1e-3, 0.5, 16});
            REQUIRE(md.has_value());
            CHECK(*md >= 1.0 - 2.0 * spec.tail_bound() - 0.02);
            CHECK(std::abs(*md - 1.0) <= 0.02);
        }
    }
}

TEST_CASE("C_m bound")
{
    std::vector<double> w;
    for (int n = 1; n <= 60; ++n) w.push_back(std::sqrt(std::ldexp(1.0, -n)));
    CHECK(c_m_bound(1, w) == doctest::Approx(0.962692).epsilon(1e-6));
    CHECK(c_m_bound(1, w) == doctest::Approx(std::sqrt((2.0 + std::sqrt(2.0)) / 8.0 + 0.5)).epsilon(1e-12));
    for (int m = 1; m <= 10; ++m) CHECK(c_m_bound(m, w) < 1.0);
    // small t_m pushes C_m towards 1
    CHECK(c_m_bound(40, w) > 1.0 - 1e-12);
    CHECK_THROWS_AS(c_m_bound(0, w), std::out_of_range);
}

TEST_CASE("symmetric chord ratio at the first kink")
{
    const KinkExampleSpec spec = KinkExampleSpec::dyadic(20);
    const Curve f = build_l2_kink_example(spec);
    const double c1 = c_m_bound(1, spec.weights);
    const double q1 = spec.kinks[0];
    double worst = 0.0;
    for (int k = 4; k <= 30; ++k) {
        const double d = std::ldexp(1.0, -k);
        worst = std::max(worst, f.dist(q1 - d, q1 + d) / (2.0 * d));
    }
    CHECK(worst <= c1 + 0.01);
    // at scales below every other kink gap the ratio is exactly C_1
    const double d = 1e-9;
    CHECK(f.dist(q1 - d, q1 + d) / (2.0 * d) == doctest::Approx(c1).epsilon(1e-6));
}
