#include "mdcurve/porosity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mdcurve {

namespace {

// Closed offset intervals |m - x| of the part of M on one side of x.
std::vector<Interval> side_offsets(const ClosedSet& M, double x, int side)
{
    std::vector<Interval> out;
    for (double p : M.points) {
        const double off = side * (p - x);
        if (off >= 0.0) out.push_back({off, off});
    }
    for (const Interval& iv : M.intervals) {
        if (side > 0 && iv.hi >= x) out.push_back({std::max(0.0, iv.lo - x), iv.hi - x});
        if (side < 0 && iv.lo <= x) out.push_back({std::max(0.0, x - iv.hi), x - iv.lo});
    }
    return out;
}

// Longest open sub-interval of (0, R) avoiding the blocked offsets.
Interval longest_gap(std::vector<Interval> blocked, double R)
{
    std::sort(blocked.begin(), blocked.end(), [](const Interval& p, const Interval& q) { return p.lo < q.lo; });
    Interval best{0.0, 0.0};
    double cursor = 0.0;
    for (const Interval& b : blocked) {
        if (b.lo >= R) break;
        if (b.lo > cursor && b.lo - cursor > best.length()) best = {cursor, b.lo};
        cursor = std::max(cursor, b.hi);
    }
    if (R > cursor && R - cursor > best.length()) best = {cursor, R};
    return best;
}

bool ball_clear(const ClosedSet& M, double x, double R, double z, double r)
{
    if (z - r < x - R || z + r > x + R) return false;
    for (double p : M.points)
        if (std::abs(p - z) < r) return false;
    for (const Interval& iv : M.intervals)
        if (iv.hi > z - r && iv.lo < z + r) return false;
    return true;
}

GapStructure porosity(const ClosedSet& M, double x, const std::vector<double>& scales, bool symmetric)
{
    if (!M.contains(x)) throw std::invalid_argument("porosity: x is not a point of M");
    GapStructure out;
    out.x = x;
    out.symmetric = symmetric;
    const auto right = side_offsets(M, x, 1);
    const auto left = side_offsets(M, x, -1);
    for (double R : scales) {
        if (!(R > 0.0)) throw std::invalid_argument("porosity: scales must be positive");
        GapRecord rec{R, 0.0, x};
        if (symmetric) {
            std::vector<Interval> both = right;
            both.insert(both.end(), left.begin(), left.end());
            const Interval g = longest_gap(std::move(both), R);
            rec.r = 0.5 * g.length();
            rec.z = x + 0.5 * (g.lo + g.hi);
        } else {
            const Interval gr = longest_gap(right, R);
            const Interval gl = longest_gap(left, R);
            if (gr.length() >= gl.length()) {
                rec.r = 0.5 * gr.length();
                rec.z = x + 0.5 * (gr.lo + gr.hi);
            } else {
                rec.r = 0.5 * gl.length();
                rec.z = x - 0.5 * (gl.lo + gl.hi);
            }
        }
        // rounding in z can push a ball onto a neighbouring point of M
        for (int tries = 0; rec.r > 0.0 && !certify_gap(M, x, rec, symmetric); ++tries)
            rec.r = tries < 8 ? rec.r * (1.0 - 1e-12 * std::ldexp(1.0, 3 * tries)) : 0.0;
        out.gaps.push_back(rec);
        out.bound = std::max(out.bound, 2.0 * rec.r / R);
    }
    return out;
}

std::vector<double> ladder_scales(const Ladder& l)
{
    l.validate();
    return l.scales();
}

}  // namespace

bool certify_gap(const ClosedSet& M, double x, const GapRecord& g, bool symmetric)
{
    if (!(g.r > 0.0)) return false;
    if (!ball_clear(M, x, g.R, g.z, g.r)) return false;
    return !symmetric || ball_clear(M, x, g.R, 2.0 * x - g.z, g.r);
}

GapStructure symmetric_porosity_lower_bound(const ClosedSet& M, double x, const std::vector<double>& scales)
{
    return porosity(M, x, scales, true);
}

GapStructure symmetric_porosity_lower_bound(const ClosedSet& M, double x, const Ladder& scales)
{
    return porosity(M, x, ladder_scales(scales), true);
}

GapStructure upper_porosity_lower_bound(const ClosedSet& M, double x, const std::vector<double>& scales)
{
    return porosity(M, x, scales, false);
}

GapStructure upper_porosity_lower_bound(const ClosedSet& M, double x, const Ladder& scales)
{
    return porosity(M, x, ladder_scales(scales), false);
}

void to_json(nlohmann::json& j, const GapStructure& g)
{
    nlohmann::json gaps = nlohmann::json::array();
    for (const GapRecord& r : g.gaps) gaps.push_back({{"R", r.R}, {"r", r.r}, {"z", r.z}});
    j = nlohmann::json{{"x", g.x}, {"symmetric", g.symmetric}, {"gaps", gaps}, {"bound", g.bound}};
}

}  // namespace mdcurve
