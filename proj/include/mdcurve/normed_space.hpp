#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace mdcurve {

/// A point of a finite-dimensional normed space. Planar kinds use two
/// coordinates; truncated sequence spaces use `dim` coordinates.
using Vector = std::vector<double>;

Vector operator-(const Vector& u, const Vector& v);
Vector operator+(const Vector& u, const Vector& v);
Vector operator*(double c, const Vector& v);

enum class NormKind { euclidean2d, l1_2d, lp_2d, polygon_gauge, l2_truncated };

/// Norm on the plane or on a truncation of l2.
///
/// Polygon gauges are the Minkowski functional of a centrally symmetric
/// convex polygon given by its vertices in cyclic order (either orientation).
/// A NormSpec is a plain value; `validate_norm_spec` checks the norm axioms.
class NormSpec {
public:
    /// Euclidean plane.
    NormSpec() : NormSpec(NormKind::euclidean2d, 2.0, {}, 2) {}

    static NormSpec euclidean2d();
    static NormSpec l1_2d();
    static NormSpec lp_2d(double p);
    static NormSpec polygon_gauge(std::vector<std::array<double, 2>> vertices);
    static NormSpec l2_truncated(std::size_t dim);

    NormKind kind() const { return kind_; }
    double p() const { return p_; }
    const std::vector<std::array<double, 2>>& vertices() const { return vertices_; }
    std::size_t dimension() const { return dim_; }
    std::string name() const;

    bool operator==(const NormSpec&) const = default;

private:
    NormSpec(NormKind kind, double p, std::vector<std::array<double, 2>> vertices, std::size_t dim);

    NormKind kind_;
    double p_ = 2.0;
    std::vector<std::array<double, 2>> vertices_;
    std::size_t dim_ = 2;
};

/// ||v|| for the given norm. Throws std::invalid_argument on a dimension
/// mismatch and std::domain_error when a polygon does not contain the origin
/// in its interior.
double norm_eval(const NormSpec& spec, std::span<const double> v);

/// ||u - v||
double distance(const NormSpec& spec, std::span<const double> u, std::span<const double> v);

struct NormValidation {
    bool ok = true;
    std::string axiom;  // empty when ok
    std::string detail;
    Vector witness_u;
    Vector witness_v;
};

/// Checks dimension, polygon symmetry/convexity, and the norm axioms on a
/// deterministic sample (fixed seed, >= 1000 vectors plus axis vectors).
/// Violations are reported, never thrown.
NormValidation validate_norm_spec(const NormSpec& spec, unsigned seed = 0);

void to_json(nlohmann::json& j, const NormSpec& spec);
void from_json(const nlohmann::json& j, NormSpec& spec);

}  // namespace mdcurve
