#pragma once

#include "hadamard/geometry.hpp"
#include "hadamard/hull.hpp"
#include "hadamard/rng.hpp"

#include <memory>
#include <string>
#include <vector>

namespace hada {

struct EnvelopeSpec;

enum class SetKind { geodesic_ball, half_space, union_set, hull_cloud, envelope };

std::string to_string(SetKind k);

/**
 * A region of the model space: membership oracle + support point cloud +
 * bounding ball. Closed-form kinds (balls, half-spaces, unions of those)
 * answer distance queries exactly; cloud-backed kinds answer via the support
 * sample refined over geodesic segments between nearby support points.
 */
struct SetRep {
    SetKind kind = SetKind::geodesic_ball;
    ModelSpace space{2, 1.0};

    std::vector<HPoint> support;
    HPoint bounding_center;
    double bounding_radius = 0.0;

    // geodesic_ball
    HPoint center;
    double radius = 0.0;

    // half_space: { x : asinh(k <x, normal>)/k <= offset }
    Vec plane_normal;
    double plane_offset = 0.0;

    // union
    std::vector<SetRep> members;

    // hull_cloud / envelope support
    std::shared_ptr<const HullCloud> cloud;
    double member_tol = 0.0;  // hull membership threshold (2 * tol)

    // envelope
    std::shared_ptr<const EnvelopeSpec> env;

    // accumulated delta-neighborhood fattening for cloud-backed kinds;
    // balls and half-spaces absorb deltas in closed form instead
    double fatten = 0.0;

    bool contains(const HPoint& p) const;
    /// 0 when contains(p); otherwise distance to the set.
    double dist(const HPoint& p) const;
    /// dist(p) <= eps with a search radius bounded by eps.
    bool within(const HPoint& p, double eps) const;

    const std::vector<HPoint>& support_points() const;
};

/// Distance from p to the set; 0 for members. Throws std::invalid_argument
/// when the set has no support points.
double dist_to_set(const ModelSpace& space, const HPoint& p, const SetRep& s);

/// Geodesic ball with a deterministic polar support grid at the given
/// spacing (supported for dim <= 3; higher dimensions fall back to a fixed-
/// seed rejection fill).
SetRep geodesic_ball_set(const ModelSpace& space, const HPoint& center, double radius,
                         double support_spacing = 0.1);

/// Half-space through boundary_point with outward unit normal (tangent).
SetRep half_space_set(const ModelSpace& space, const HPoint& boundary_point,
                      const HTangent& outward_normal);

SetRep union_of(const ModelSpace& space, std::vector<SetRep> members);

/**
 * m_rho geodesic balls, radii in [0.5, spread], all containing common_point,
 * so the union is connected and pairwise intersections are nonempty.
 * Geodesic balls in curvature -k^2 have boundary normal curvature
 * k coth(k r) > k, hence they are lambda-convex for lambda <= k; larger
 * lambda is rejected as unsupported.
 */
std::vector<SetRep> make_lambda_convex_suite(const ModelSpace& space, int m_rho, double lambda,
                                             const HPoint& common_point, double spread,
                                             RngStream& rng, double support_spacing = 0.1);

/// Convex hull approximation: closure of the seeds under geodesic midpoints
/// to density tol; membership is distance <= 2 tol to the cloud.
SetRep geodesic_hull(const ModelSpace& space, const std::vector<HPoint>& seeds,
                     double tol = 1e-3, std::size_t max_points = 10'000'000);

/// { p : dist(p, s) <= delta }.
SetRep delta_neighborhood(const ModelSpace& space, const SetRep& s, double delta);

/// Measured hull-to-set gap: max over (up to `probes`, stride-subsampled)
/// hull support points of dist_to_set(point, t_set).
double hull_gap(const ModelSpace& space, const SetRep& t_set, const SetRep& hull,
                int probes, RngStream& rng);

struct ConvexityReport {
    int violations = 0;
    double worst_depth = 0.0;
    int pairs_tested = 0;
};

/// Samples member pairs and tests 9 interior geodesic points each; a
/// violation is an interior point outside the set by more than 1e-4.
ConvexityReport convexity_probe(const ModelSpace& space, const SetRep& s, int trials,
                                RngStream& rng);

/// Deterministic polar/Fibonacci point grid of a geodesic ball at the given
/// spacing (every ball point is within ~spacing of the grid).
std::vector<HPoint> ball_point_grid(const ModelSpace& space, const HPoint& center, double radius,
                                    double spacing);

/// Max pairwise distance over a support cloud (subsampled above `cap`).
double cloud_diameter(const ModelSpace& space, const std::vector<HPoint>& pts,
                      std::size_t cap = 4096);

} // namespace hada
