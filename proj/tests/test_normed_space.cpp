#include <doctest.h>

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "mdcurve/normed_space.hpp"

using namespace mdcurve;

namespace {

using Poly = std::vector<std::array<double, 2>>;

// point-in-convex-polygon by edge cross products, vertices counterclockwise
bool inside_ccw(const Poly& vs, double x, double y)
{
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const auto& p = vs[i];
        const auto& q = vs[(i + 1) % vs.size()];
        if ((q[0] - p[0]) * (y - p[1]) - (q[1] - p[1]) * (x - p[0]) < -1e-15) return false;
    }
    return true;
}

// Minkowski functional by bisection on the scale
double gauge_by_bisection(const Poly& vs, double x, double y)
{
    if (x == 0.0 && y == 0.0) return 0.0;
    double lo = 0.0, hi = 1.0;
    while (!inside_ccw(vs, x / hi, y / hi)) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (inside_ccw(vs, x / mid, y / mid) ? hi : lo) = mid;
    }
    return hi;
}

const Poly kSquare{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
const Poly kHexagon{{1, 0}, {0.5, 0.8}, {-0.5, 0.8}, {-1, 0}, {-0.5, -0.8}, {0.5, -0.8}};

}  // namespace

TEST_CASE("closed-form norms")
{
    CHECK(norm_eval(NormSpec::l1_2d(), std::vector<double>{1.0, -1.0}) == doctest::Approx(2.0));
    CHECK(norm_eval(NormSpec::euclidean2d(), std::vector<double>{3.0, 4.0}) == doctest::Approx(5.0));
    CHECK(norm_eval(NormSpec::lp_2d(3.0), std::vector<double>{1.0, 1.0}) == doctest::Approx(std::cbrt(2.0)));
    CHECK(norm_eval(NormSpec::l2_truncated(4), std::vector<double>{1.0, 1.0, 1.0, 1.0}) == doctest::Approx(2.0));
    CHECK(norm_eval(NormSpec::euclidean2d(), std::vector<double>{0.0, 0.0}) == 0.0);
    CHECK(distance(NormSpec::l1_2d(), std::vector<double>{1.0, 2.0}, std::vector<double>{0.0, 0.0}) ==
          doctest::Approx(3.0));
}

TEST_CASE("dimension mismatch throws")
{
    CHECK_THROWS_AS(norm_eval(NormSpec::euclidean2d(), std::vector<double>{1.0, 2.0, 3.0}), std::invalid_argument);
    CHECK_THROWS_AS(norm_eval(NormSpec::l2_truncated(3), std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("polygon gauge matches a bisection oracle")
{
    const NormSpec sq = NormSpec::polygon_gauge(kSquare);
    CHECK(norm_eval(sq, std::vector<double>{0.5, 0.25}) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(norm_eval(sq, std::vector<double>{1.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-12));

    const NormSpec hex = NormSpec::polygon_gauge(kHexagon);
    for (const auto& v : kHexagon) CHECK(norm_eval(hex, std::vector<double>{v[0], v[1]}) == doctest::Approx(1.0));

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 500; ++i) {
        const double x = u(rng), y = u(rng);
        CHECK(norm_eval(hex, std::vector<double>{x, y}) == doctest::Approx(gauge_by_bisection(kHexagon, x, y)).epsilon(1e-9));
        CHECK(norm_eval(sq, std::vector<double>{x, y}) == doctest::Approx(gauge_by_bisection(kSquare, x, y)).epsilon(1e-9));
    }
}

TEST_CASE("polygon orientation does not matter")
{
    Poly cw(kHexagon.rbegin(), kHexagon.rend());
    const NormSpec a = NormSpec::polygon_gauge(kHexagon);
    const NormSpec b = NormSpec::polygon_gauge(cw);
    CHECK(norm_eval(a, std::vector<double>{0.3, -0.7}) == doctest::Approx(norm_eval(b, std::vector<double>{0.3, -0.7})));
}

TEST_CASE("validation accepts genuine norms")
{
    for (const NormSpec& n : {NormSpec::euclidean2d(), NormSpec::l1_2d(), NormSpec::lp_2d(1.5), NormSpec::lp_2d(4.0),
                              NormSpec::polygon_gauge(kSquare), NormSpec::polygon_gauge(kHexagon),
                              NormSpec::l2_truncated(20)}) {
        const NormValidation v = validate_norm_spec(n);
        CHECK_MESSAGE(v.ok, n.name() << ": " << v.axiom << " " << v.detail);
    }
}

TEST_CASE("validation reports the violated axiom")
{
    const NormValidation tri = validate_norm_spec(NormSpec::polygon_gauge({{1, 0}, {-0.5, 0.8}, {-0.5, -0.8}}));
    CHECK_FALSE(tri.ok);
    CHECK(tri.axiom == "symmetry");

    const NormValidation half = validate_norm_spec(NormSpec::lp_2d(0.5));
    CHECK_FALSE(half.ok);
    CHECK(half.axiom == "triangle_inequality");
    REQUIRE(half.witness_u.size() == 2);
    CHECK(norm_eval(NormSpec::lp_2d(0.5), half.witness_u + half.witness_v) >
          norm_eval(NormSpec::lp_2d(0.5), half.witness_u) + norm_eval(NormSpec::lp_2d(0.5), half.witness_v));

    const NormValidation concave =
        validate_norm_spec(NormSpec::polygon_gauge({{1, 0}, {0.2, 0.2}, {0, 1}, {-1, 0}, {-0.2, -0.2}, {0, -1}}));
    CHECK_FALSE(concave.ok);
    CHECK(concave.axiom == "convexity");
}

TEST_CASE("validation is deterministic")
{
    const auto a = validate_norm_spec(NormSpec::lp_2d(0.7), 3);
    const auto b = validate_norm_spec(NormSpec::lp_2d(0.7), 3);
    CHECK(a.axiom == b.axiom);
    CHECK(a.witness_u == b.witness_u);
    CHECK(a.witness_v == b.witness_v);
}

TEST_CASE("json round trip")
{
    for (const NormSpec& n : {NormSpec::euclidean2d(), NormSpec::lp_2d(3.0), NormSpec::polygon_gauge(kHexagon),
                              NormSpec::l2_truncated(5)}) {
        nlohmann::json j = n;
        CHECK(j.get<NormSpec>() == n);
    }
    CHECK_THROWS(nlohmann::json{{"kind", "nope"}}.get<NormSpec>());
}
