#pragma once

#include "hadamard/geometry.hpp"

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace hada {

/**
 * Point cloud with a spatial index in log-map coordinates.
 *
 * The chart at the anchor is distance-nonexpanding, so |u(p)-u(q)| is a
 * lower bound for d(p,q): grid pruning never discards a true neighbour.
 * Only the first three chart coordinates are indexed; for dim > 3 the bound
 * still holds (dropping coordinates shrinks norms), the grid is just less
 * selective.
 */
class PointGrid {
public:
    PointGrid(const ModelSpace& space, const HPoint& anchor, double cell);

    int insert(const HPoint& p);
    const HPoint& point(int id) const { return pts_[id]; }
    const std::vector<HPoint>& points() const { return pts_; }
    std::size_t size() const { return pts_.size(); }

    /// True when some stored point lies within hyperbolic distance eps of p.
    bool any_within(const HPoint& p, double eps) const;

    /// Up to k nearest stored points (exact), via doubling-radius search.
    std::vector<int> nearest(const HPoint& p, int k) const;

    /// Exact distance to the nearest stored point.
    double nearest_dist(const HPoint& p) const;

private:
    std::int64_t cell_key(const Eigen::Vector3d& u) const;
    void collect(const Eigen::Vector3d& u, double radius, std::vector<int>& out) const;

    ModelSpace space_;
    TangentChart chart_;
    double cell_;
    std::vector<HPoint> pts_;
    std::vector<Eigen::Vector3d> coords_;
    std::unordered_map<std::int64_t, std::vector<std::int32_t>> cells_;
};

/// Discretized geodesic convex hull: seeds closed under geodesic midpoints
/// until every midpoint sits within tol of the cloud.
struct HullCloud {
    ModelSpace space;
    double tol;
    std::shared_ptr<PointGrid> grid;

    const std::vector<HPoint>& points() const { return grid->points(); }

    /// Distance to the cloud, refined over the geodesic segments joining the
    /// three nearest support points (the cloud samples the hull at spacing
    /// tol; the true nearest set point lies between samples).
    double refined_dist(const HPoint& p) const;

    /// refined_dist(p) <= eps, with a search radius bounded by eps.
    bool within(const HPoint& p, double eps) const;
};

/// Midpoint-closure iteration cap was hit; achieved_tol estimates the
/// density actually reached.
struct HullLimitError : std::runtime_error {
    HullLimitError(std::string msg, double achieved)
        : std::runtime_error(std::move(msg)), achieved_tol(achieved) {}
    double achieved_tol;
};

HullCloud build_hull_cloud(const ModelSpace& space, const std::vector<HPoint>& seeds,
                           double tol, std::size_t max_points = 10'000'000);

/// Exact distance from p to the geodesic segment from a towards unit
/// direction dir of the given length.
double segment_distance(const ModelSpace& space, const HPoint& p, const HPoint& a,
                        const Vec& unit_dir, double length);

/// Exact distance from p to the geodesic segment [a, b].
double segment_distance(const ModelSpace& space, const HPoint& p, const HPoint& a,
                        const HPoint& b);

} // namespace hada
