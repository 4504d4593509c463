#include "mdcurve/curve_spec.hpp"

#include <fstream>
#include <numbers>
#include <stdexcept>

#include "mdcurve/box_curve.hpp"
#include "mdcurve/hat_curve.hpp"
#include "mdcurve/kink_example.hpp"
#include "mdcurve/polyline_spiral.hpp"
#include "mdcurve/reparam.hpp"
#include "mdcurve/spiral.hpp"
#include "mdcurve/standard_curves.hpp"

namespace mdcurve {

namespace {

nlohmann::json domain_json(const Curve& c)
{
    return nlohmann::json{{"domain", {c.a(), c.b()}},
                          {"norm", c.space()},
                          {"breakpoints", c.breakpoints().size()}};
}

BuiltCurve with_domain(Curve c, nlohmann::json meta)
{
    meta.update(domain_json(c));
    return {std::move(c), std::move(meta)};
}

BuiltCurve build_hat(const nlohmann::json& spec, int depth_override)
{
    const int depth = depth_override > 0 ? depth_override : spec.value("depth", 4);
    const HatCurve h(depth, parse_hat_schedule(spec.value("schedule", "slow")));
    const std::string param = spec.value("parameterization", "arc_length");
    nlohmann::json meta = hat_metadata(h);
    meta["parameterization"] = param;
    if (param == "graph") return with_domain(h.graph_curve(), meta);
    if (param != "arc_length") throw std::invalid_argument("hat: unknown parameterization '" + param + "'");
    auto [g, v] = arc_length_reparameterize(h.graph_curve());
    return with_domain(std::move(g), meta);
}

}  // namespace

BuiltCurve build_curve(const nlohmann::json& spec, int depth_override)
{
    if (!spec.is_object() || !spec.contains("type")) throw std::invalid_argument("curve spec needs a \"type\"");
    const std::string type = spec.at("type").get<std::string>();
    const double a = spec.value("a", 0.0), b = spec.value("b", 1.0);
    const double sa = spec.value("a", -1.0), sb = spec.value("b", 1.0);
    try {
        if (type == "spiral") {
            const double q = spec.value("q", 0.9), alpha = spec.value("alpha", 1.0);
            const SpiralParams p = spec.contains("b") ? make_spiral_params(q, alpha, spec.at("b").get<double>())
                                                      : make_spiral_params(q, alpha);
            nlohmann::json meta = p;
            meta["type"] = type;
            return with_domain(SpiralCurve(p).curve(), meta);
        }
        if (type == "box") {
            const double alpha = spec.value("alpha", std::numbers::pi / 4);
            return with_domain(build_box_curve(alpha), {{"type", type}, {"alpha", alpha}, {"h", 0.5 * std::tan(alpha)}});
        }
        if (type == "polyline") {
            const NormSpec n = spec.contains("norm") ? spec.at("norm").get<NormSpec>() : NormSpec::euclidean2d();
            const PolylineSpiral s = build_polyline_spiral(n, spec.value("q", 0.9), spec.value("alpha", 1.0));
            return with_domain(s.curve(), s);
        }
        if (type == "hat") return build_hat(spec, depth_override);
        if (type == "kink") {
            const KinkExampleSpec k = spec.get<KinkExampleSpec>();
            return with_domain(build_l2_kink_example(k), k);
        }
        nlohmann::json meta{{"type", type}};
        if (type == "segment") return with_domain(curves::segment(a, b, spec.value("speed", 1.0)), meta);
        if (type == "abs") return with_domain(curves::abs_curve(sa, sb), meta);
        if (type == "parabola") return with_domain(curves::parabola(a, b), meta);
        if (type == "square") return with_domain(curves::square(sa, sb), meta);
        if (type == "step") return with_domain(curves::step(sa, sb), meta);
        if (type == "circle") return with_domain(curves::circle(a, spec.value("b", 2.0 * std::numbers::pi)), meta);
        if (type == "constant") return with_domain(curves::constant(a, b), meta);
        if (type == "plateau") return with_domain(curves::plateau(), meta);
        if (type == "log_oscillation") return with_domain(curves::log_oscillation(sa, sb), meta);
        if (type == "piecewise_linear") {
            meta["knots"] = spec.at("knots");
            meta["slopes"] = spec.at("slopes");
            return with_domain(curves::piecewise_linear(spec.at("knots").get<std::vector<double>>(),
                                                        spec.at("slopes").get<std::vector<double>>()),
                               meta);
        }
        if (type == "random_piecewise_smooth") {
            const auto seed = spec.value("seed", std::uint64_t{0});
            const int pieces = spec.value("pieces", 8);
            meta["seed"] = seed;
            meta["pieces"] = pieces;
            return with_domain(curves::random_piecewise_smooth(seed, pieces), meta);
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("curve spec '" + type + "': " + e.what());
    }
    throw std::invalid_argument("unknown curve type '" + type + "'");
}

nlohmann::json load_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error("'" + path.string() + "' is not valid JSON: " + e.what());
    }
}

}  // namespace mdcurve
