#include "mdcurve/defect.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mdcurve/variation.hpp"

namespace mdcurve {

namespace {

constexpr int kSymmetricScales = 40;
constexpr int kUnilateralScales = 12;
constexpr int kBilateralOffsets = 9;

}  // namespace

DefectEstimate md_defect(const Curve& curve, double x, double window, int pair_samples, double md_value,
                         PairMode mode)
{
    if (!curve.domain().contains(x)) throw std::invalid_argument("md_defect: x outside curve domain");
    if (!(window > 0.0)) throw std::invalid_argument("md_defect: window must be positive");
    if (pair_samples < 1) throw std::invalid_argument("md_defect: pair_samples must be >= 1");
    DefectEstimate d;
    d.window = window;
    d.md_used = md_value;
    d.witness_y = d.witness_z = x;
    d.clipped = x - window < curve.a() || x + window > curve.b();

    std::vector<double> pts;
    for (int i = -pair_samples; i <= pair_samples; ++i) {
        const double y = x + window * i / pair_samples;
        if (curve.domain().contains(y)) pts.push_back(y);
    }
    std::vector<Vector> fp;
    fp.reserve(pts.size());
    for (double y : pts) fp.push_back(curve(y));

    auto consider = [&](double y, const Vector& fy, double z, const Vector& fz) {
        if (y == z) return;
        if (mode == PairMode::same_side && (y - x) * (z - x) < 0.0) return;
        const double denom = std::abs(y - x) + std::abs(z - x);
        const double r = std::abs(distance(curve.space(), fy, fz) - md_value * std::abs(y - z)) / denom;
        ++d.pairs;
        if (r > d.defect) {
            d.defect = r;
            d.witness_y = y;
            d.witness_z = z;
        }
    };
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) consider(pts[i], fp[i], pts[j], fp[j]);

    if (mode == PairMode::all) {
        const double floor = 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x));
        double t = window;
        for (int k = 0; k < kSymmetricScales && t > floor; ++k, t *= 0.5) {
            const double y = x - t, z = x + t;
            if (!curve.domain().contains(y) || !curve.domain().contains(z)) continue;
            consider(y, curve(y), z, curve(z));
        }
    }
    return d;
}

RegularityProfile chord_arc_ratios(const Curve& curve, const std::vector<std::pair<double, double>>& pairs,
                                   int depth)
{
    RegularityProfile p;
    if (pairs.empty()) return p;
    std::vector<double> required;
    for (const auto& [y, z] : pairs) {
        if (y > z) throw std::invalid_argument("chord_arc_ratios: need y <= z");
        required.push_back(y);
        required.push_back(z);
    }
    const CumulativeVariation cv = cumulative_variation(curve, required, depth);
    auto at = [&](double t) {
        auto it = std::lower_bound(cv.required.begin(), cv.required.end(), t);
        return cv.at_required(static_cast<std::size_t>(it - cv.required.begin()));
    };
    p.min_ratio = std::numeric_limits<double>::infinity();
    for (const auto& [y, z] : pairs) {
        const double v = at(z) - at(y);
        if (!(v > 0.0)) throw std::domain_error("regularity ratio: zero variation on a sampled pair");
        const double c = curve.dist(y, z);
        p.y.push_back(y);
        p.z.push_back(z);
        p.chord.push_back(c);
        p.variation.push_back(v);
        p.ratio.push_back(std::min(1.0, c / v));
        if (p.ratio.back() < p.min_ratio) {
            p.min_ratio = p.ratio.back();
            p.argmin = p.ratio.size() - 1;
        }
    }
    return p;
}

RegularityProfile regularity_ratio(const Curve& curve, double x, double window, int depth, bool bilateral)
{
    if (!curve.domain().contains(x)) throw std::invalid_argument("regularity_ratio: x outside curve domain");
    if (!(window > 0.0)) throw std::invalid_argument("regularity_ratio: window must be positive");
    const double a = curve.a(), b = curve.b();
    std::vector<std::pair<double, double>> pairs;
    if (!bilateral) {
        double t = window;
        for (int k = 0; k < kUnilateralScales; ++k, t *= 0.5) {
            if (x + t <= b) pairs.emplace_back(x, x + t);
            if (x - t >= a) pairs.emplace_back(x - t, x);
        }
    } else {
        std::vector<double> left{x}, right{x};
        for (int i = 1; i <= kBilateralOffsets; ++i) {
            const double off = window * i / kBilateralOffsets;
            if (x - off >= a) left.push_back(x - off);
            if (x + off <= b) right.push_back(x + off);
        }
        for (double y : left)
            for (double z : right)
                if (y < z) pairs.emplace_back(y, z);
        double t = window;
        for (int k = 0; k < kUnilateralScales; ++k, t *= 0.5)
            if (x - t >= a && x + t <= b) pairs.emplace_back(x - t, x + t);
    }
    if (pairs.empty()) throw std::invalid_argument("regularity_ratio: window leaves no pairs inside the domain");
    RegularityProfile p = chord_arc_ratios(curve, pairs, depth);
    p.bilateral = bilateral;
    return p;
}

void to_json(nlohmann::json& j, const DefectEstimate& d)
{
    j = nlohmann::json{{"window", d.window},       {"clipped", d.clipped},     {"defect", d.defect},
                       {"md_used", d.md_used},     {"witness_y", d.witness_y}, {"witness_z", d.witness_z},
                       {"pairs", d.pairs}};
}

}  // namespace mdcurve
