#include "hadamard/covering.hpp"

#include "hadamard/volumes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hada {

int FarthestPointOrder::cover_count(double eps) const {
    for (std::size_t c = 0; c < radii.size(); ++c)
        if (radii[c] <= eps) return static_cast<int>(c) + 1;
    return static_cast<int>(radii.size());
}

FarthestPointOrder farthest_point_order(const ModelSpace& space, const std::vector<HPoint>& pts,
                                        double stop_radius, std::size_t max_centers) {
    return farthest_point_order(
        pts.size(), [&](int i, int j) { return distance(space, pts[i], pts[j]); }, stop_radius,
        max_centers);
}

GreedyCover greedy_covering_number(const ModelSpace& space, const std::vector<HPoint>& pts,
                                   double eps) {
    if (pts.empty()) throw std::invalid_argument("greedy_covering_number: empty point set");
    if (!(eps > 0.0)) throw std::invalid_argument("greedy_covering_number: eps must be positive");
    const FarthestPointOrder fp = farthest_point_order(space, pts, eps);
    GreedyCover g;
    g.count = fp.cover_count(eps);
    g.centers.assign(fp.order.begin(), fp.order.begin() + g.count);
    return g;
}

int exact_covering_number_small(const std::vector<std::vector<double>>& dist, double eps) {
    const std::size_t m = dist.size();
    if (m == 0) throw std::invalid_argument("exact_covering_number_small: empty point set");
    if (m > 16) throw std::invalid_argument("exact_covering_number_small: more than 16 points");

    std::vector<std::uint32_t> cover(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (dist[i][j] <= eps) cover[i] |= 1u << j;

    const std::uint32_t full = (m == 32) ? ~0u : ((1u << m) - 1u);
    std::vector<std::uint8_t> dp(full + 1u, 255);
    dp[0] = 0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const int low = __builtin_ctz(mask);
        std::uint8_t best = 255;
        for (std::size_t i = 0; i < m; ++i) {
            if (!(cover[i] & (1u << low))) continue;
            const std::uint8_t sub = dp[mask & ~cover[i]];
            if (sub != 255 && sub + 1 < best) best = static_cast<std::uint8_t>(sub + 1);
        }
        dp[mask] = best;
    }
    return dp[full];
}

int exact_covering_number_small(const ModelSpace& space, const std::vector<HPoint>& pts,
                                double eps) {
    std::vector<std::vector<double>> d(pts.size(), std::vector<double>(pts.size(), 0.0));
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            d[i][j] = d[j][i] = distance(space, pts[i], pts[j]);
    return exact_covering_number_small(d, eps);
}

CoveringProfile covering_profile(const ModelSpace& space, const std::vector<HPoint>& pts,
                                 const std::vector<double>& eps_grid) {
    if (pts.empty()) throw std::invalid_argument("covering_profile: empty point set");
    if (eps_grid.empty()) throw std::invalid_argument("covering_profile: empty eps grid");
    for (std::size_t i = 1; i < eps_grid.size(); ++i)
        if (!(eps_grid[i] < eps_grid[i - 1]))
            throw std::invalid_argument("covering_profile: eps grid must be decreasing");

    const FarthestPointOrder fp = farthest_point_order(space, pts, eps_grid.back());
    CoveringProfile prof;
    prof.epsilons = eps_grid;
    prof.counts.reserve(eps_grid.size());
    for (double e : eps_grid) prof.counts.push_back(fp.cover_count(e));
    return prof;
}

std::vector<double> default_eps_grid(double diam, int size, double ratio) {
    if (!(diam > 0.0)) throw std::invalid_argument("default_eps_grid: diameter must be positive");
    if (size < 2) throw std::invalid_argument("default_eps_grid: need at least 2 grid points");
    std::vector<double> g(size);
    for (int i = 0; i < size; ++i)
        g[i] = diam * std::pow(ratio, -static_cast<double>(i) / (size - 1));
    return g;
}

SandwichReport volume_sandwich_check(const ModelSpace& space, const SetRep& s, double eps,
                                     std::int64_t samples, RngStream& rng) {
    if (!(eps > 0.0)) throw std::invalid_argument("volume_sandwich_check: eps must be positive");
    SandwichReport rep;
    rep.eps = eps;
    rep.vol_b = ball_volume(space, 1.0);
    if (s.kind == SetKind::geodesic_ball) {
        rep.vol_a = ball_volume(space, s.radius);  // exact when available
        rep.eps_ball_checked = true;
        rep.eps_ball_contained = eps <= s.radius;
    } else {
        rep.vol_a = mc_volume(space, s, samples, rng).value;
        rep.eps_ball_checked = false;
        rep.eps_ball_contained = false;
    }
    const double scale = rep.vol_a / rep.vol_b;
    rep.lower = std::pow(1.0 / eps, space.dim) * scale;
    rep.upper = std::pow(3.0 / eps, space.dim) * scale;
    rep.n_greedy = greedy_covering_number(space, s.support_points(), eps).count;
    rep.pass = (rep.lower <= rep.n_greedy + 1e-9) && (rep.n_greedy <= rep.upper + 1e-9);
    return rep;
}

RatioCheck covering_ratio_check(const CoveringProfile& profile_t, const CoveringProfile& profile_th,
                                double R, int n) {
    if (profile_t.epsilons.size() != profile_th.epsilons.size())
        throw std::invalid_argument("covering_ratio_check: eps grid size mismatch");
    for (std::size_t i = 0; i < profile_t.epsilons.size(); ++i)
        if (std::abs(profile_t.epsilons[i] - profile_th.epsilons[i]) >
            1e-12 * std::max(1.0, profile_t.epsilons[i]))
            throw std::invalid_argument("covering_ratio_check: eps grids differ");

    RatioCheck rc;
    rc.epsilons = profile_t.epsilons;
    const double bound = R * std::pow(3.0, n);
    for (std::size_t i = 0; i < rc.epsilons.size(); ++i) {
        const double nt = profile_t.counts[i];
        const double nth = profile_th.counts[i];
        const double ratio = nth / nt;
        rc.ratios.push_back(ratio);
        const bool ok = nth <= bound * nt + 1e-9;
        rc.ok.push_back(ok);
        rc.all_ok = rc.all_ok && ok;
        rc.max_ratio = std::max(rc.max_ratio, ratio);
    }
    return rc;
}

} // namespace hada
