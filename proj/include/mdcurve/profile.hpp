#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "mdcurve/curve.hpp"
#include "mdcurve/derived_numbers.hpp"

namespace mdcurve {

/// n equally spaced points of [a, b], n >= 2.
struct GridSpec {
    double a = 0.0;
    double b = 1.0;
    int n = 101;
    std::vector<double> points() const;
};

/// "a:b:n"; throws std::invalid_argument on malformed text, b <= a or n < 2.
GridSpec parse_grid(const std::string& text);
/// "t0:ratio:steps"; throws std::invalid_argument on malformed text or a bad ladder.
Ladder parse_ladder(const std::string& text);

/// One profile row. NaN marks a quantity that is unavailable at x (a
/// one-sided domain end, or a window with no admissible pairs).
struct ProfileRow {
    double x = 0.0;
    double mD_plus_upper = 0.0;
    double mD_plus_lower = 0.0;
    double mD_minus_upper = 0.0;
    double mD_minus_lower = 0.0;
    double md = 0.0;  // finest-scale estimate, reported whether or not md settles
    bool md_exists = false;
    double defect = 0.0;
    double bilateral_ratio_min = 0.0;
};

/// Defect and bilateral ratio use the window ladder.t0.
std::vector<ProfileRow> profile_curve(const Curve& curve, const std::vector<double>& grid, const Ladder& ladder,
                                      double tol = 1e-2);

/// Header plus one line per row, 17 significant digits, "inf" / "nan" spelled out.
std::string profile_csv(const std::vector<ProfileRow>& rows);

/// Writes to a temporary sibling and renames it over `path`.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace mdcurve
