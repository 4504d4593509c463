#include "mdcurve/normed_space.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace mdcurve {

Vector operator-(const Vector& u, const Vector& v)
{
    if (u.size() != v.size()) throw std::invalid_argument("vector dimension mismatch");
    Vector r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] - v[i];
    return r;
}

Vector operator+(const Vector& u, const Vector& v)
{
    if (u.size() != v.size()) throw std::invalid_argument("vector dimension mismatch");
    Vector r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] + v[i];
    return r;
}

Vector operator*(double c, const Vector& v)
{
    Vector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

NormSpec::NormSpec(NormKind kind, double p, std::vector<std::array<double, 2>> vertices, std::size_t dim)
    : kind_(kind), p_(p), vertices_(std::move(vertices)), dim_(dim)
{
}

NormSpec NormSpec::euclidean2d() { return {NormKind::euclidean2d, 2.0, {}, 2}; }
NormSpec NormSpec::l1_2d() { return {NormKind::l1_2d, 1.0, {}, 2}; }

NormSpec NormSpec::lp_2d(double p)
{
    if (!(p > 0.0)) throw std::invalid_argument("lp exponent must be positive");
    return {NormKind::lp_2d, p, {}, 2};
}

NormSpec NormSpec::polygon_gauge(std::vector<std::array<double, 2>> vertices)
{
    if (vertices.size() < 3) throw std::invalid_argument("polygon gauge needs at least 3 vertices");
    return {NormKind::polygon_gauge, 0.0, std::move(vertices), 2};
}

NormSpec NormSpec::l2_truncated(std::size_t dim)
{
    if (dim == 0) throw std::invalid_argument("l2 truncation needs dim >= 1");
    return {NormKind::l2_truncated, 2.0, {}, dim};
}

std::string NormSpec::name() const
{
    switch (kind_) {
    case NormKind::euclidean2d: return "euclidean2d";
    case NormKind::l1_2d: return "l1_2d";
    case NormKind::lp_2d: return "lp_2d";
    case NormKind::polygon_gauge: return "polygon_gauge";
    case NormKind::l2_truncated: return "l2_truncated";
    }
    return "unknown";
}

namespace {

double signed_area(const std::vector<std::array<double, 2>>& vs)
{
    double a = 0.0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const auto& p = vs[i];
        const auto& q = vs[(i + 1) % vs.size()];
        a += p[0] * q[1] - q[0] * p[1];
    }
    return 0.5 * a;
}

// max over edges of <n_i, v> / <n_i, v_i> with n_i the outward edge normal:
// the ray from the origin through v leaves the polygon through the edge
// attaining the maximum.
double polygon_gauge_eval(const std::vector<std::array<double, 2>>& vs, double x, double y)
{
    const double orient = signed_area(vs) >= 0.0 ? 1.0 : -1.0;
    double best = 0.0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const auto& p = vs[i];
        const auto& q = vs[(i + 1) % vs.size()];
        const double nx = orient * (q[1] - p[1]);
        const double ny = -orient * (q[0] - p[0]);
        const double c = nx * p[0] + ny * p[1];
        if (!(c > 0.0))
            throw std::domain_error("polygon gauge: origin is not interior to the polygon");
        best = std::max(best, (nx * x + ny * y) / c);
    }
    return best;
}

}  // namespace

double norm_eval(const NormSpec& spec, std::span<const double> v)
{
    if (v.size() != spec.dimension())
        throw std::invalid_argument("norm_eval: vector has dimension " + std::to_string(v.size()) +
                                    ", norm expects " + std::to_string(spec.dimension()));
    switch (spec.kind()) {
    case NormKind::euclidean2d: return std::hypot(v[0], v[1]);
    case NormKind::l1_2d: return std::abs(v[0]) + std::abs(v[1]);
    case NormKind::lp_2d: {
        const double a = std::abs(v[0]);
        const double b = std::abs(v[1]);
        const double m = std::max(a, b);
        if (m == 0.0) return 0.0;
        const double p = spec.p();
        return m * std::pow(std::pow(a / m, p) + std::pow(b / m, p), 1.0 / p);
    }
    case NormKind::polygon_gauge: return polygon_gauge_eval(spec.vertices(), v[0], v[1]);
    case NormKind::l2_truncated: {
        double s = 0.0;
        for (double c : v) s += c * c;
        return std::sqrt(s);
    }
    }
    return 0.0;
}

double distance(const NormSpec& spec, std::span<const double> u, std::span<const double> v)
{
    if (u.size() != v.size()) throw std::invalid_argument("distance: dimension mismatch");
    double buf[2];
    if (u.size() == 2) {
        buf[0] = u[0] - v[0];
        buf[1] = u[1] - v[1];
        return norm_eval(spec, std::span<const double>(buf, 2));
    }
    Vector d(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) d[i] = u[i] - v[i];
    return norm_eval(spec, d);
}

namespace {

constexpr double kSlack = 1e-12;

NormValidation violation(std::string axiom, std::string detail, Vector u = {}, Vector v = {})
{
    return {false, std::move(axiom), std::move(detail), std::move(u), std::move(v)};
}

std::optional<NormValidation> check_polygon_structure(const std::vector<std::array<double, 2>>& vs)
{
    const std::size_t n = vs.size();
    for (const auto& p : vs) {
        const bool has_mirror = std::any_of(vs.begin(), vs.end(), [&](const auto& q) {
            return std::abs(q[0] + p[0]) <= kSlack && std::abs(q[1] + p[1]) <= kSlack;
        });
        if (!has_mirror) {
            std::ostringstream os;
            os << "vertex (" << p[0] << ", " << p[1] << ") has no mirror image";
            return violation("symmetry", os.str(), Vector{p[0], p[1]}, Vector{-p[0], -p[1]});
        }
    }
    const double orient = signed_area(vs) >= 0.0 ? 1.0 : -1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = vs[i];
        const auto& b = vs[(i + 1) % n];
        const auto& c = vs[(i + 2) % n];
        const double cross = orient * ((b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]));
        if (std::abs(cross) <= kSlack)
            return violation("collinear_vertices", "three consecutive vertices are collinear",
                             Vector{b[0], b[1]});
        if (cross < 0.0)
            return violation("convexity", "polygon is not convex", Vector{b[0], b[1]});
    }
    return std::nullopt;
}

}  // namespace

NormValidation validate_norm_spec(const NormSpec& spec, unsigned seed)
{
    if (spec.kind() == NormKind::lp_2d && !(spec.p() > 0.0))
        return violation("parameter", "lp exponent must be positive");
    if (spec.kind() == NormKind::polygon_gauge) {
        if (auto v = check_polygon_structure(spec.vertices())) return *v;
    }

    const std::size_t dim = spec.dimension();
    std::vector<Vector> sample;
    for (double sign : {1.0, -1.0}) {
        for (std::size_t i = 0; i < dim; ++i) {
            Vector e(dim, 0.0);
            e[i] = sign;
            sample.push_back(std::move(e));
        }
    }
    sample.emplace_back(dim, 1.0);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-10.0, 10.0);
    while (sample.size() < 1024 + 2 * dim) {
        Vector v(dim);
        for (double& c : v) c = coord(rng);
        sample.push_back(std::move(v));
    }

    try {
        const Vector zero(dim, 0.0);
        if (norm_eval(spec, zero) != 0.0) return violation("zero", "norm of the zero vector is not 0", zero);

        std::uniform_real_distribution<double> scal(-5.0, 5.0);
        for (std::size_t i = 0; i < sample.size(); ++i) {
            const Vector& u = sample[i];
            const double nu = norm_eval(spec, u);
            if (!(nu > 0.0)) return violation("positivity", "nonzero vector with norm <= 0", u);
            if (std::abs(norm_eval(spec, -1.0 * u) - nu) > kSlack * std::max(1.0, nu))
                return violation("symmetry", "||-v|| != ||v||", u);
            const double c = scal(rng);
            if (std::abs(norm_eval(spec, c * u) - std::abs(c) * nu) > kSlack * std::max(1.0, std::abs(c) * nu))
                return violation("homogeneity", "||cv|| != |c| ||v|| for c = " + std::to_string(c), u);
        }
        for (std::size_t i = 0; i < sample.size(); ++i) {
            // each vector against a handful of partners keeps this O(n)
            for (std::size_t k : {i + 1, i + 7, i + 101}) {
                const Vector& u = sample[i];
                const Vector& v = sample[k % sample.size()];
                const double lhs = norm_eval(spec, u + v);
                const double rhs = norm_eval(spec, u) + norm_eval(spec, v);
                if (lhs > rhs + kSlack * std::max(1.0, rhs))
                    return violation("triangle_inequality", "||u+v|| > ||u|| + ||v||", u, v);
            }
        }
    } catch (const std::exception& e) {
        return violation("evaluation", e.what());
    }
    return {};
}

void to_json(nlohmann::json& j, const NormSpec& spec)
{
    j = nlohmann::json{{"kind", spec.name()}};
    switch (spec.kind()) {
    case NormKind::lp_2d: j["p"] = spec.p(); break;
    case NormKind::polygon_gauge: {
        nlohmann::json vs = nlohmann::json::array();
        for (const auto& v : spec.vertices()) vs.push_back({v[0], v[1]});
        j["vertices"] = vs;
        break;
    }
    case NormKind::l2_truncated: j["dim"] = spec.dimension(); break;
    default: break;
    }
}

void from_json(const nlohmann::json& j, NormSpec& spec)
{
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "euclidean2d") spec = NormSpec::euclidean2d();
    else if (kind == "l1_2d") spec = NormSpec::l1_2d();
    else if (kind == "lp_2d") spec = NormSpec::lp_2d(j.at("p").get<double>());
    else if (kind == "polygon_gauge") {
        std::vector<std::array<double, 2>> vs;
        for (const auto& v : j.at("vertices")) vs.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
        spec = NormSpec::polygon_gauge(std::move(vs));
    } else if (kind == "l2_truncated") spec = NormSpec::l2_truncated(j.at("dim").get<std::size_t>());
    else throw std::invalid_argument("unknown norm kind '" + kind + "'");
}

}  // namespace mdcurve
