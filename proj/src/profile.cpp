#include "mdcurve/profile.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

#include "mdcurve/defect.hpp"

namespace mdcurve {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, sep);) out.push_back(part);
    return out;
}

double to_double(const std::string& s, const std::string& what)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw std::invalid_argument(what + ": '" + s + "' is not a number");
    return v;
}

int to_int(const std::string& s, const std::string& what)
{
    const double v = to_double(s, what);
    if (v != std::floor(v) || std::abs(v) > 1e9) throw std::invalid_argument(what + ": '" + s + "' is not an integer");
    return static_cast<int>(v);
}

double side_value(const SideRatios& s, const DerivedNumber& d)
{
    if (!s.available) return kNaN;
    return d.infinite ? std::numeric_limits<double>::infinity() : d.value;
}

std::string fmt(double v)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::vector<double> GridSpec::points() const
{
    std::vector<double> out;
    for (int i = 0; i < n; ++i) out.push_back(i == n - 1 ? b : a + (b - a) * i / (n - 1));
    return out;
}

GridSpec parse_grid(const std::string& text)
{
    const auto p = split(text, ':');
    if (p.size() != 3) throw std::invalid_argument("grid must be a:b:n, got '" + text + "'");
    GridSpec g{to_double(p[0], "grid a"), to_double(p[1], "grid b"), to_int(p[2], "grid n")};
    if (!(g.b > g.a)) throw std::invalid_argument("grid needs b > a");
    if (g.n < 2) throw std::invalid_argument("grid needs n >= 2");
    return g;
}

Ladder parse_ladder(const std::string& text)
{
    const auto p = split(text, ':');
    if (p.size() != 3) throw std::invalid_argument("ladder must be t0:ratio:steps, got '" + text + "'");
    Ladder l{to_double(p[0], "ladder t0"), to_double(p[1], "ladder ratio"), to_int(p[2], "ladder steps")};
    l.validate();
    return l;
}

std::vector<ProfileRow> profile_curve(const Curve& curve, const std::vector<double>& grid, const Ladder& ladder,
                                      double tol)
{
    ladder.validate();
    std::vector<ProfileRow> rows;
    for (double x : grid) {
        if (!curve.domain().contains(x)) throw std::invalid_argument("profile: grid point " + fmt(x) + " outside the curve domain");
        const MetricDerivativeResult md = metric_derivative_detail(curve, x, ladder, tol);
        const DerivedNumberEstimate& e = md.estimate;
        ProfileRow r;
        r.x = x;
        r.mD_plus_upper = side_value(e.plus, e.plus.upper);
        r.mD_plus_lower = side_value(e.plus, e.plus.lower);
        r.mD_minus_upper = side_value(e.minus, e.minus.upper);
        r.mD_minus_lower = side_value(e.minus, e.minus.lower);
        r.md = md.value;
        r.md_exists = md.exists;
        r.defect = md_defect(curve, x, ladder.t0, 8, md.value).defect;
        try {
            r.bilateral_ratio_min = regularity_ratio(curve, x, ladder.t0, 10, true).min_ratio;
        } catch (const std::domain_error&) {
            r.bilateral_ratio_min = kNaN;  // constant near x
        } catch (const std::invalid_argument&) {
            r.bilateral_ratio_min = kNaN;  // domain end: no straddling pairs
        }
        rows.push_back(r);
    }
    return rows;
}

std::string profile_csv(const std::vector<ProfileRow>& rows)
{
    std::string out = "x,mDpu,mDpl,mDmu,mDml,md,md_exists,defect,bilateral_ratio_min\n";
    for (const ProfileRow& r : rows) {
        out += fmt(r.x) + ',' + fmt(r.mD_plus_upper) + ',' + fmt(r.mD_plus_lower) + ',' + fmt(r.mD_minus_upper) + ',' +
               fmt(r.mD_minus_lower) + ',' + fmt(r.md) + ',' + (r.md_exists ? "true" : "false") + ',' + fmt(r.defect) +
               ',' + fmt(r.bilateral_ratio_min) + '\n';
    }
    return out;
}

void write_atomic(const std::filesystem::path& path, const std::string& content)
{
    if (path.empty()) throw std::invalid_argument("output path is empty");
    std::filesystem::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("write to '" + tmp.string() + "' failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot rename onto '" + path.string() + "': " + ec.message());
    }
}

}  // namespace mdcurve
