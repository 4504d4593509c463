#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mdcurve/curve_spec.hpp"
#include "mdcurve/profile.hpp"
#include "mdcurve/verification.hpp"

using namespace mdcurve;

namespace {

constexpr int exit_fail = 1;
constexpr int exit_config = 2;

void emit(const std::string& out, const std::string& content)
{
    if (out.empty() || out == "-") std::cout << content;
    else write_atomic(out, content);
}

int cmd_build(const std::string& spec_path, int depth, const std::string& out)
{
    const BuiltCurve c = build_curve(load_json_file(spec_path), depth);
    emit(out, c.metadata.dump(2) + "\n");
    return 0;
}

int cmd_profile(const std::string& spec_path, int depth, const std::string& grid_text, const std::string& ladder_text,
                double tol, const std::string& out)
{
    const BuiltCurve c = build_curve(load_json_file(spec_path), depth);
    const GridSpec grid = grid_text.empty() ? GridSpec{c.curve.a(), c.curve.b(), 101} : parse_grid(grid_text);
    const Ladder ladder = ladder_text.empty() ? Ladder::defaults_for(c.curve) : parse_ladder(ladder_text);
    emit(out, profile_csv(profile_curve(c.curve, grid.points(), ladder, tol)));
    return 0;
}

int cmd_verify(const std::string& suite, const std::string& spec_path, int depth, std::uint64_t seed, bool timing,
               const std::string& out)
{
    SuiteOptions o;
    o.seed = seed;
    o.depth = depth;
    if (!spec_path.empty()) o.spec = load_json_file(spec_path);

    nlohmann::json doc;
    bool pass = true;
    if (suite == "all") {
        doc = nlohmann::json::array();
        for (const std::string& name : suite_names()) {
            const VerificationReport r = run_suite(name, o);
            pass = pass && r.pass();
            doc.push_back(report_json(r, timing));
        }
    } else {
        const VerificationReport r = run_suite(suite, o);
        pass = r.pass();
        doc = report_json(r, timing);
    }
    emit(out, doc.dump(2) + "\n");
    return pass ? 0 : exit_fail;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Metric derivatives of curves in normed spaces"};
    app.require_subcommand(1);

    std::string spec, grid, ladder, out, suite;
    int depth = 0;
    std::uint64_t seed = 0;
    double tol = 1e-2;
    bool timing = false;

    CLI::App* build = app.add_subcommand("build", "Build a curve from a JSON spec and print its metadata");
    build->add_option("--spec", spec, "Curve spec JSON file")->required();
    build->add_option("--depth", depth, "Hat curve depth override")->check(CLI::NonNegativeNumber);
    build->add_option("--out", out, "Output path (default stdout)");

    CLI::App* profile = app.add_subcommand("profile", "Write a CSV of derived numbers, md, defect and bilateral ratio");
    profile->add_option("--spec", spec, "Curve spec JSON file")->required();
    profile->add_option("--grid", grid, "a:b:n (default: domain with 101 points)");
    profile->add_option("--ladder", ladder, "t0:ratio:steps (default: 1e-2 (b - a):0.5:20)");
    profile->add_option("--depth", depth, "Hat curve depth override")->check(CLI::NonNegativeNumber);
    profile->add_option("--tol", tol, "md existence tolerance")->check(CLI::PositiveNumber);
    profile->add_option("--out", out, "Output path (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite and print its JSON report");
    verify->add_option("--suite", suite, "Suite name or 'all'")->required();
    verify->add_option("--spec", spec, "JSON overrides for the suite's builder");
    verify->add_option("--depth", depth, "Hat depth override")->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", seed, "Sampling seed");
    verify->add_option("--out", out, "Output path (default stdout)");
    verify->add_flag("--timing", timing, "Include wall time in the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_config;
    }

    try {
        if (*build) return cmd_build(spec, depth, out);
        if (*profile) return cmd_profile(spec, depth, grid, ladder, tol, out);
        return cmd_verify(suite, spec, depth, seed, timing, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config;
    }
}
