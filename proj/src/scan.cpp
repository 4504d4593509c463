#include "mdcurve/scan.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "mdcurve/defect.hpp"

namespace mdcurve {

namespace {

double as_real(const DerivedNumber& d) { return d.infinite ? std::numeric_limits<double>::infinity() : d.value; }

// one-sided metric derivative, by the same settling rule as metric_derivative
bool side_limit(const SideRatios& s, double tol, double& value)
{
    if (!s.available || s.upper.infinite || s.lower.infinite) return false;
    if (s.cauchy > tol || s.upper.value - s.lower.value > std::max(tol, 3.0 * s.cauchy)) return false;
    value = s.ratios.back();
    return true;
}

double gap(double p, double q)
{
    if (std::isinf(p) && std::isinf(q)) return 0.0;
    return std::abs(p - q);
}

}  // namespace

ScanPredicate parse_scan_predicate(const std::string& name)
{
    if (name == "unilateral_mismatch") return ScanPredicate::unilateral_mismatch;
    if (name == "angular") return ScanPredicate::angular;
    if (name == "upper_mismatch") return ScanPredicate::upper_mismatch;
    if (name == "lower_mismatch") return ScanPredicate::lower_mismatch;
    if (name == "md_exists_not_mdiff") return ScanPredicate::md_exists_not_mdiff;
    throw std::invalid_argument("unknown scan predicate '" + name + "'");
}

std::string to_string(ScanPredicate p)
{
    switch (p) {
    case ScanPredicate::unilateral_mismatch: return "unilateral_mismatch";
    case ScanPredicate::angular: return "angular";
    case ScanPredicate::upper_mismatch: return "upper_mismatch";
    case ScanPredicate::lower_mismatch: return "lower_mismatch";
    case ScanPredicate::md_exists_not_mdiff: return "md_exists_not_mdiff";
    }
    return "unknown";
}

std::vector<FlaggedPoint> scan_exceptional_points(const Curve& curve, const std::vector<double>& grid,
                                                  const Ladder& ladder, ScanPredicate predicate,
                                                  const ScanOptions& options)
{
    ladder.validate();
    std::vector<FlaggedPoint> out;
    for (double x : grid) {
        if (!curve.domain().contains(x)) throw std::invalid_argument("scan: grid point outside curve domain");
        std::ostringstream detail;
        detail.precision(17);
        double margin = -1.0;
        if (predicate == ScanPredicate::md_exists_not_mdiff) {
            const MetricDerivativeResult md = metric_derivative_detail(curve, x, ladder, options.tol);
            if (!md.exists) continue;
            const double window = options.defect_window > 0.0 ? options.defect_window : ladder.t0;
            const DefectEstimate d = md_defect(curve, x, window, options.pair_samples, md.value);
            margin = d.defect - options.defect_threshold;
            detail << "md=" << md.value << " defect=" << d.defect << " witness=(" << d.witness_y << ","
                   << d.witness_z << ")";
        } else {
            const DerivedNumberEstimate e = derived_numbers(curve, x, ladder);
            if (!e.plus.available || !e.minus.available) continue;
            const double pu = as_real(e.plus.upper), pl = as_real(e.plus.lower);
            const double mu = as_real(e.minus.upper), ml = as_real(e.minus.lower);
            switch (predicate) {
            case ScanPredicate::unilateral_mismatch: {
                double vp = 0.0, vm = 0.0;
                if (!side_limit(e.plus, options.tol, vp) || !side_limit(e.minus, options.tol, vm)) continue;
                margin = std::abs(vp - vm) - options.tol;
                detail << "md_plus=" << vp << " md_minus=" << vm;
                break;
            }
            case ScanPredicate::angular: {
                const double m1 = std::isinf(pl) && std::isinf(mu) ? 0.0 : pl - mu;
                const double m2 = std::isinf(ml) && std::isinf(pu) ? 0.0 : ml - pu;
                margin = std::max(m1, m2) - options.tol;
                detail << "mD_plus_lower=" << pl << " mD_minus_upper=" << mu << " mD_minus_lower=" << ml
                       << " mD_plus_upper=" << pu;
                break;
            }
            case ScanPredicate::upper_mismatch:
                margin = gap(pu, mu) - options.tol;
                detail << "mD_plus_upper=" << pu << " mD_minus_upper=" << mu;
                break;
            case ScanPredicate::lower_mismatch:
                margin = gap(pl, ml) - options.tol;
                detail << "mD_plus_lower=" << pl << " mD_minus_lower=" << ml;
                break;
            default: break;
            }
        }
        if (margin > 0.0) out.push_back({x, margin, detail.str()});
    }
    return out;
}

void to_json(nlohmann::json& j, const FlaggedPoint& f)
{
    j = nlohmann::json{{"x", f.x}, {"detail", f.detail}};
    if (std::isinf(f.margin)) j["margin"] = "inf";
    else j["margin"] = f.margin;
}

}  // namespace mdcurve
