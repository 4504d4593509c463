#include "mdcurve/variation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mdcurve {

namespace {

constexpr int kMaxDepth = 24;
constexpr int kMaxGapLevel = 8;

struct Node {
    double x;
    int level;  // depth at which the node first enters the partition
};

// Level at which k/2^d first appears in the dyadic hierarchy.
int dyadic_level(std::size_t k, int d)
{
    if (k == 0) return 0;
    int l = d;
    while (l > 0 && (k & 1u) == 0) {
        k >>= 1;
        --l;
    }
    return l;
}

}  // namespace

double CumulativeVariation::interpolate(double t) const
{
    if (nodes.empty()) return 0.0;
    if (t <= nodes.front()) return cumulative.front();
    if (t >= nodes.back()) return cumulative.back();
    auto it = std::upper_bound(nodes.begin(), nodes.end(), t);
    const std::size_t i = static_cast<std::size_t>(it - nodes.begin());
    const double x0 = nodes[i - 1], x1 = nodes[i];
    const double w = (t - x0) / (x1 - x0);
    return cumulative[i - 1] + w * (cumulative[i] - cumulative[i - 1]);
}

double CumulativeVariation::inverse(double s) const
{
    if (nodes.empty()) return 0.0;
    if (s <= cumulative.front()) return nodes.front();
    if (s >= cumulative.back()) {
        // first node where the total is reached
        auto it = std::lower_bound(cumulative.begin(), cumulative.end(), cumulative.back());
        return nodes[static_cast<std::size_t>(it - cumulative.begin())];
    }
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), s);
    const std::size_t i = static_cast<std::size_t>(it - cumulative.begin());
    const double c0 = cumulative[i - 1], c1 = cumulative[i];
    const double w = c1 > c0 ? (s - c0) / (c1 - c0) : 0.0;
    return nodes[i - 1] + w * (nodes[i] - nodes[i - 1]);
}

CumulativeVariation cumulative_variation(const Curve& curve, std::vector<double> required, int depth)
{
    if (depth < 0 || depth > kMaxDepth)
        throw std::invalid_argument("variation depth must lie in [0, " + std::to_string(kMaxDepth) + "]");
    for (double r : required) {
        if (!curve.domain().contains(r)) throw std::out_of_range("required node outside curve domain");
    }
    std::sort(required.begin(), required.end());
    required.erase(std::unique(required.begin(), required.end()), required.end());

    CumulativeVariation out;
    out.depth = depth;
    out.required = required;
    if (required.empty()) return out;
    if (required.size() == 1) {
        out.nodes = required;
        out.cumulative = {0.0};
        out.required_at = {0};
        return out;
    }

    const double lo = required.front();
    const double hi = required.back();
    std::vector<double> anchors = required;
    for (double bp : breakpoints_within(curve, lo, hi)) anchors.push_back(bp);
    std::sort(anchors.begin(), anchors.end());
    anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());

    std::vector<Node> nodes;
    for (double x : anchors) nodes.push_back({x, 0});
    const std::size_t n_dyadic = std::size_t{1} << depth;
    const double width = hi - lo;
    for (std::size_t k = 1; k < n_dyadic; ++k) {
        const double frac = static_cast<double>(k) / static_cast<double>(n_dyadic);
        nodes.push_back({lo + width * frac, dyadic_level(k, depth)});
    }
    const int gap_level = std::min(depth, kMaxGapLevel);
    const std::size_t n_gap = std::size_t{1} << gap_level;
    for (std::size_t g = 0; g + 1 < anchors.size(); ++g) {
        const double g0 = anchors[g];
        const double gw = anchors[g + 1] - anchors[g];
        for (std::size_t k = 1; k < n_gap; ++k) {
            const double frac = static_cast<double>(k) / static_cast<double>(n_gap);
            nodes.push_back({g0 + gw * frac, dyadic_level(k, gap_level)});
        }
    }
    std::sort(nodes.begin(), nodes.end(), [](const Node& p, const Node& q) {
        return p.x < q.x || (p.x == q.x && p.level < q.level);
    });
    nodes.erase(std::unique(nodes.begin(), nodes.end(), [](const Node& p, const Node& q) { return p.x == q.x; }),
                nodes.end());

    std::vector<Vector> values;
    values.reserve(nodes.size());
    for (const Node& n : nodes) values.push_back(curve.eval_clamped(n.x));

    const NormSpec& space = curve.space();
    out.nodes.reserve(nodes.size());
    out.cumulative.reserve(nodes.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (i > 0) {
            sum += distance(space, values[i], values[i - 1]);
            out.mesh = std::max(out.mesh, nodes[i].x - nodes[i - 1].x);
        }
        out.nodes.push_back(nodes[i].x);
        out.cumulative.push_back(sum);
    }

    // coarser chord sums from the same evaluations
    auto coarse_sum = [&](int max_level) {
        double s = 0.0;
        std::size_t prev = 0;
        for (std::size_t i = 1; i < nodes.size(); ++i) {
            if (nodes[i].level > max_level) continue;
            s += distance(space, values[i], values[prev]);
            prev = i;
        }
        return s;
    };
    const double v_d = sum;
    const double v_d1 = depth >= 1 ? coarse_sum(depth - 1) : v_d;
    const double v_d2 = depth >= 2 ? coarse_sum(depth - 2) : v_d1;
    out.increment = std::max(0.0, v_d - v_d1);
    out.previous_increment = std::max(0.0, v_d1 - v_d2);
    out.error_bound = out.increment;
    if (auto L = curve.lipschitz_bound()) out.error_bound += *L * out.mesh;
    out.converged = !(out.increment > 1e-6 * std::max(1.0, v_d) && out.increment >= 0.75 * out.previous_increment);

    out.required_at.reserve(required.size());
    for (double r : required) {
        auto it = std::lower_bound(out.nodes.begin(), out.nodes.end(), r);
        out.required_at.push_back(static_cast<std::size_t>(it - out.nodes.begin()));
    }
    return out;
}

VariationResult variation(const Curve& curve, double s, double t, int depth)
{
    if (s > t) throw std::invalid_argument("variation: need s <= t");
    if (!curve.domain().contains(s) || !curve.domain().contains(t))
        throw std::out_of_range("variation: interval outside curve domain");
    if (s == t) return {0.0, 0.0, depth, true};
    const CumulativeVariation cv = cumulative_variation(curve, {s, t}, depth);
    return {cv.total(), cv.error_bound, depth, cv.converged};
}

VariationProfile variation_profile(const Curve& curve, int grid_size, int depth)
{
    if (grid_size < 2) throw std::invalid_argument("variation_profile: grid_size must be >= 2");
    VariationProfile p;
    p.refinement_depth = depth;
    const double a = curve.a(), b = curve.b();
    p.grid.resize(static_cast<std::size_t>(grid_size));
    for (int i = 0; i < grid_size; ++i)
        p.grid[static_cast<std::size_t>(i)] = i + 1 == grid_size ? b : a + (b - a) * i / (grid_size - 1);
    const CumulativeVariation cv = cumulative_variation(curve, p.grid, depth);
    p.values.resize(p.grid.size());
    for (std::size_t i = 0; i < p.grid.size(); ++i) {
        auto it = std::lower_bound(cv.required.begin(), cv.required.end(), p.grid[i]);
        p.values[i] = cv.at_required(static_cast<std::size_t>(it - cv.required.begin()));
    }
    p.error_bound = cv.error_bound;
    p.converged = cv.converged;
    return p;
}

void to_json(nlohmann::json& j, const VariationProfile& p)
{
    j = nlohmann::json{{"grid", p.grid},
                       {"values", p.values},
                       {"refinement_depth", p.refinement_depth},
                       {"error_bound", p.error_bound},
                       {"converged", p.converged}};
}

}  // namespace mdcurve
