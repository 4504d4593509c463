#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mdcurve/curve_spec.hpp"
#include "mdcurve/profile.hpp"
#include "mdcurve/verification.hpp"

using namespace mdcurve;
namespace fs = std::filesystem;

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

const CheckResult* find_check(const VerificationReport& r, const std::string& id)
{
    for (const CheckResult& c : r.checks)
        if (c.id == id) return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("grid and ladder parsing")
{
    const GridSpec g = parse_grid("-1:1:5");
    CHECK(g.points() == std::vector<double>{-1.0, -0.5, 0.0, 0.5, 1.0});
    CHECK(parse_grid("0:2.5:2").points().back() == 2.5);
    for (const char* bad : {"0:1", "1:0:5", "0:1:1", "a:b:c", "0:1:5:7", "0:1:2.5", ""})
        CHECK_THROWS_AS(parse_grid(bad), std::invalid_argument);

    const Ladder l = parse_ladder("1e-3:0.5:12");
    CHECK(l.t0 == 1e-3);
    CHECK(l.ratio == 0.5);
    CHECK(l.steps == 12);
    for (const char* bad : {"0:0.5:12", "1e-3:1.5:12", "1e-3:0.5:2", "x:0.5:12"})
        CHECK_THROWS_AS(parse_ladder(bad), std::invalid_argument);
}

TEST_CASE("profile of a segment")
{
    const BuiltCurve c = build_curve({{"type", "segment"}});
    const auto rows = profile_curve(c.curve, parse_grid("0:1:11").points(), parse_ladder("1e-3:0.5:12"));
    REQUIRE(rows.size() == 11);
    for (const ProfileRow& r : rows) {
        CHECK(r.md == 1.0);
        CHECK(r.md_exists);
        CHECK(r.defect == 0.0);
    }
    CHECK(std::isnan(rows.front().mD_minus_upper));
    CHECK(std::isnan(rows.back().mD_plus_upper));

    const auto csv = parse_csv(profile_csv(rows));
    REQUIRE(csv.size() == 12);
    CHECK(csv[0] == std::vector<std::string>{"x", "mDpu", "mDpl", "mDmu", "mDml", "md", "md_exists", "defect",
                                             "bilateral_ratio_min"});
    CHECK(csv[1][3] == "nan");
    CHECK(csv[6][0] == "0.5");
    CHECK(csv[6][6] == "true");
}

TEST_CASE("profile of |t| at the corner")
{
    const BuiltCurve c = build_curve({{"type", "abs"}});
    const auto rows = profile_curve(c.curve, {-0.5, 0.0, 0.5}, parse_ladder("1e-3:0.5:12"));
    CHECK(rows[1].md_exists);
    CHECK(rows[1].md == doctest::Approx(1.0));
    CHECK(rows[1].defect == doctest::Approx(1.0));
    CHECK(rows[1].bilateral_ratio_min == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(rows[0].defect == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("profiles are deterministic")
{
    const BuiltCurve c = build_curve({{"type", "random_piecewise_smooth"}, {"seed", 3}});
    const auto grid = parse_grid("0:1:37").points();
    const Ladder l = parse_ladder("1e-3:0.5:14");
    CHECK(profile_csv(profile_curve(c.curve, grid, l)) == profile_csv(profile_curve(c.curve, grid, l)));
}

TEST_CASE("curve specs")
{
    CHECK(build_curve({{"type", "parabola"}, {"a", -1.0}, {"b", 2.0}}).curve.b() == 2.0);
    const BuiltCurve s = build_curve({{"type", "spiral"}, {"q", 0.9}, {"alpha", 1.0}, {"b", 2.5}});
    CHECK(s.metadata["type"] == "spiral");
    const BuiltCurve h = build_curve({{"type", "hat"}, {"depth", 5}}, 3);
    CHECK(h.metadata["depth"] == 3);
    CHECK(h.curve.a() == 0.0);
    CHECK(h.curve.b() == doctest::Approx(h.metadata["exact_length"].get<double>()).epsilon(1e-6));
    const BuiltCurve hg = build_curve({{"type", "hat"}, {"depth", 2}, {"parameterization", "graph"}});
    CHECK(hg.curve.a() == -1.0);
    const BuiltCurve p = build_curve({{"type", "polyline"}, {"norm", {{"kind", "l1_2d"}}}, {"q", 0.9}, {"alpha", 1.0}});
    CHECK(p.curve.space().kind() == NormKind::l1_2d);
    CHECK(build_curve({{"type", "piecewise_linear"}, {"knots", {0.0, 0.5, 1.0}}, {"slopes", {1.0, 2.0}}})
              .curve.breakpoints()
              .size() >= 1);
    CHECK_THROWS_AS(build_curve({{"type", "nonesuch"}}), std::invalid_argument);
    CHECK_THROWS_AS(build_curve({{"q", 0.9}}), std::invalid_argument);
    CHECK_THROWS(build_curve({{"type", "kink"}, {"weights", {0.5, 0.3}}, {"kinks", {0.5, 0.25}}}));
}

TEST_CASE("atomic writes and spec files")
{
    const fs::path dir = fs::temp_directory_path() / "mdcurve_test_reports";
    fs::create_directories(dir);
    const fs::path out = dir / "out.txt";
    write_atomic(out, "first\n");
    write_atomic(out, "second\n");
    std::ifstream in(out);
    std::string text((std::istreambuf_iterator<char>(in)), {});
    CHECK(text == "second\n");
    for (const auto& e : fs::directory_iterator(dir)) CHECK(e.path().filename() == "out.txt");
    CHECK_THROWS(write_atomic(dir / "missing" / "x.txt", "x"));

    const fs::path spec = dir / "spec.json";
    std::ofstream(spec) << R"({"type": "box", "alpha": 0.5})";
    CHECK(load_json_file(spec)["alpha"] == 0.5);
    std::ofstream(spec) << "{ not json";
    CHECK_THROWS_AS(load_json_file(spec), std::runtime_error);
    CHECK_THROWS_AS(load_json_file(dir / "absent.json"), std::runtime_error);
    fs::remove_all(dir);
}

TEST_CASE("suites pass and reports are stable")
{
    for (const std::string name : {"spiral", "box", "kink", "reparam", "porosity"}) {
        const VerificationReport r = run_suite(name);
        CHECK_MESSAGE(r.pass(), report_json(r).dump(2));
        for (const CheckResult& c : r.checks) CHECK(!c.anchor.empty());
        CHECK(report_json(r).dump() == report_json(run_suite(name)).dump());
        CHECK_FALSE(report_json(r).contains("wall_time_s"));
        CHECK(report_json(r, true).contains("wall_time_s"));
    }
    SuiteOptions shallow;
    shallow.depth = 4;
    CHECK(run_suite("hat", shallow).pass());
    CHECK_THROWS_AS(run_suite("unknown"), std::invalid_argument);
}

TEST_CASE("box suite reports the exact ratio")
{
    const VerificationReport r = run_suite("box");
    const CheckResult* c = find_check(r, "l1_ratio");
    REQUIRE(c);
    CHECK(c->measured <= 1e-12);
}

TEST_CASE("mis-normalized kink weights become a failed check")
{
    SuiteOptions o;
    o.spec = nlohmann::json{{"weights", {0.5, 0.3}}, {"kinks", {0.5, 0.25}}, {"tail_mass", 0.0}};
    const VerificationReport r = run_suite("kink", o);
    CHECK_FALSE(r.pass());
    const CheckResult* c = find_check(r, "build");
    REQUIRE(c);
    CHECK(c->detail.find("normalized") != std::string::npos);
    const nlohmann::json j = report_json(r);
    CHECK(j["pass"] == false);
}

TEST_CASE("hat suite fails cleanly past the underflow depth")
{
    SuiteOptions o;
    o.depth = 9;
    const VerificationReport r = run_suite("hat", o);
    CHECK_FALSE(r.pass());
    CHECK(find_check(r, "build"));
}

TEST_CASE("nan measurements serialize as strings")
{
    VerificationReport r;
    r.suite = "x";
    r.at_most("a", "anchor", NAN, 1.0);
    r.at_least("b", "anchor", INFINITY, 1.0);
    const nlohmann::json j = report_json(r);
    CHECK(j["checks"][0]["measured"] == "nan");
    CHECK(j["checks"][0]["pass"] == false);
    CHECK(j["checks"][1]["measured"] == "inf");
    CHECK(j["pass"] == false);
    CHECK_FALSE(VerificationReport{}.pass());
}
