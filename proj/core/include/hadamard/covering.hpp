#pragma once

#include "hadamard/sets.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hada {

/**
 * Farthest-point traversal of a finite metric space. radii[i] is the
 * covering radius once centers order[0..i] are placed, so the greedy
 * covering number at any eps reads off the same ordering:
 * N(eps) = min{ c : radii[c-1] <= eps }. radii is nonincreasing, hence the
 * profile counts are automatically monotone.
 */
struct FarthestPointOrder {
    std::vector<int> order;
    std::vector<double> radii;

    int cover_count(double eps) const;
};

template <class DistFn>
FarthestPointOrder farthest_point_order(std::size_t count, DistFn&& dist,
                                        double stop_radius = 0.0,
                                        std::size_t max_centers = static_cast<std::size_t>(-1)) {
    FarthestPointOrder fp;
    if (count == 0) return fp;
    std::vector<double> mind(count);
    fp.order.push_back(0);
    for (std::size_t i = 0; i < count; ++i) mind[i] = dist(0, static_cast<int>(i));
    for (;;) {
        std::size_t far = 0;
        double r = -1.0;
        for (std::size_t i = 0; i < count; ++i)
            if (mind[i] > r) {
                r = mind[i];
                far = i;
            }
        fp.radii.push_back(r);
        if (r <= stop_radius || fp.order.size() >= std::min(count, max_centers)) break;
        fp.order.push_back(static_cast<int>(far));
        for (std::size_t i = 0; i < count; ++i)
            mind[i] = std::min(mind[i], dist(static_cast<int>(far), static_cast<int>(i)));
    }
    return fp;
}

FarthestPointOrder farthest_point_order(const ModelSpace& space, const std::vector<HPoint>& pts,
                                        double stop_radius = 0.0,
                                        std::size_t max_centers = static_cast<std::size_t>(-1));

struct GreedyCover {
    int count = 0;
    std::vector<int> centers;
};

/// Greedy covering number at scale eps; an upper bound on the true covering
/// number whose centers form an eps-packing.
GreedyCover greedy_covering_number(const ModelSpace& space, const std::vector<HPoint>& pts,
                                   double eps);

/// Exact covering number by bitmask set-cover DP; at most 16 points, centers
/// restricted to the points themselves.
int exact_covering_number_small(const std::vector<std::vector<double>>& dist, double eps);
int exact_covering_number_small(const ModelSpace& space, const std::vector<HPoint>& pts,
                                double eps);

struct CoveringProfile {
    std::vector<double> epsilons;  // decreasing
    std::vector<int> counts;
    std::string method = "greedy";
};

/// Greedy profile over a decreasing eps grid, from a single farthest-point
/// traversal.
CoveringProfile covering_profile(const ModelSpace& space, const std::vector<HPoint>& pts,
                                 const std::vector<double>& eps_grid);

/// Default grid: `size` log-spaced values from diam down to diam/ratio.
std::vector<double> default_eps_grid(double diam, int size = 16, double ratio = 64.0);

struct SandwichReport {
    double eps = 0.0;
    double vol_a = 0.0;
    double vol_b = 0.0;  // unit-ball normalization
    double lower = 0.0;  // (1/eps)^n vol_a / vol_b
    double upper = 0.0;  // (3/eps)^n vol_a / vol_b
    int n_greedy = 0;
    bool eps_ball_checked = false;  // the upper bound needs an eps-ball inside A
    bool eps_ball_contained = false;
    bool pass = false;
};

/// Volume sandwich for a convex set: checks lower <= N_greedy <= upper with
/// Vol(B) the geodesic unit ball. The eps-ball precondition is verified for
/// ball kinds and reported unverified otherwise.
SandwichReport volume_sandwich_check(const ModelSpace& space, const SetRep& s, double eps,
                                     std::int64_t samples, RngStream& rng);

struct RatioCheck {
    std::vector<double> epsilons;
    std::vector<double> ratios;     // N_Th / N_T per eps
    std::vector<bool> ok;           // N_Th <= R 3^n N_T
    double max_ratio = 0.0;
    bool all_ok = true;
};

/// Per-eps check N_Th(eps) <= R 3^n N_T(eps) on matched grids; throws
/// std::invalid_argument on grid mismatch.
RatioCheck covering_ratio_check(const CoveringProfile& profile_t, const CoveringProfile& profile_th,
                                double R, int n);

} // namespace hada
