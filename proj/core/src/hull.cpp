#include "hadamard/hull.hpp"

#include "hadamard/sets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hada {

namespace {
constexpr std::int64_t kCellOffset = 1 << 20;

std::int64_t pack_cell(int ix, int iy, int iz) {
    return (static_cast<std::int64_t>(ix + kCellOffset)) |
           (static_cast<std::int64_t>(iy + kCellOffset) << 21) |
           (static_cast<std::int64_t>(iz + kCellOffset) << 42);
}

int cell_index(double u, double cell) { return static_cast<int>(std::floor(u / cell)); }
} // namespace

PointGrid::PointGrid(const ModelSpace& space, const HPoint& anchor, double cell)
    : space_(space), chart_(space, anchor), cell_(cell) {
    if (!(cell > 0.0)) throw std::invalid_argument("PointGrid: cell must be positive");
}

std::int64_t PointGrid::cell_key(const Eigen::Vector3d& u) const {
    return pack_cell(cell_index(u[0], cell_), cell_index(u[1], cell_), cell_index(u[2], cell_));
}

int PointGrid::insert(const HPoint& p) {
    const int id = static_cast<int>(pts_.size());
    pts_.push_back(p);
    coords_.push_back(chart_.coords3(p));
    cells_[cell_key(coords_.back())].push_back(id);
    return id;
}

void PointGrid::collect(const Eigen::Vector3d& u, double radius, std::vector<int>& out) const {
    out.clear();
    const int x0 = cell_index(u[0] - radius, cell_), x1 = cell_index(u[0] + radius, cell_);
    const int y0 = cell_index(u[1] - radius, cell_), y1 = cell_index(u[1] + radius, cell_);
    const int z0 = cell_index(u[2] - radius, cell_), z1 = cell_index(u[2] + radius, cell_);
    for (int ix = x0; ix <= x1; ++ix)
        for (int iy = y0; iy <= y1; ++iy)
            for (int iz = z0; iz <= z1; ++iz) {
                const auto it = cells_.find(pack_cell(ix, iy, iz));
                if (it == cells_.end()) continue;
                out.insert(out.end(), it->second.begin(), it->second.end());
            }
}

bool PointGrid::any_within(const HPoint& p, double eps) const {
    if (pts_.empty()) return false;
    const Eigen::Vector3d u = chart_.coords3(p);
    std::vector<int> cand;
    collect(u, eps, cand);
    for (int id : cand)
        if (distance(space_, p, pts_[id]) <= eps) return true;
    return false;
}

std::vector<int> PointGrid::nearest(const HPoint& p, int k) const {
    std::vector<int> best;
    if (pts_.empty()) return best;
    const Eigen::Vector3d u = chart_.coords3(p);
    double radius = 4.0 * cell_;
    std::vector<int> cand;
    for (;;) {
        collect(u, radius, cand);
        if (static_cast<int>(cand.size()) >= k || cand.size() == pts_.size()) {
            std::sort(cand.begin(), cand.end(), [&](int a, int b) {
                const double da = distance(space_, p, pts_[a]);
                const double db = distance(space_, p, pts_[b]);
                return da != db ? da < db : a < b;
            });
            if (static_cast<int>(cand.size()) > k) cand.resize(k);
            // all points with d <= radius are candidates; if the worst kept
            // distance exceeds the search radius there may be unseen closer
            // points, so widen and retry
            const double worst = distance(space_, p, pts_[cand.back()]);
            if (worst <= radius || cand.size() == pts_.size()) return cand;
            radius = worst + cell_;
        } else {
            radius *= 2.0;
        }
    }
}

double PointGrid::nearest_dist(const HPoint& p) const {
    const auto ids = nearest(p, 1);
    if (ids.empty()) return std::numeric_limits<double>::infinity();
    return distance(space_, p, pts_[ids[0]]);
}

double segment_distance(const ModelSpace& space, const HPoint& p, const HPoint& a,
                        const Vec& unit_dir, double length) {
    const double k = space.k;
    const double alpha = -k * k * minkowski_form(p.x, a.x);   // cosh(k d(p,a))
    const double beta = -k * minkowski_form(p.x, unit_dir);
    // cosh(k d(p, gamma(t))) = alpha cosh(kt) + beta sinh(kt); the minimizer
    // over the full geodesic is tanh(k t*) = -beta/alpha, then clamp to the
    // segment.
    double t = 0.0;
    const double ratio = -beta / alpha;
    if (ratio >= 1.0) t = length;
    else if (ratio > -1.0) t = std::clamp(std::atanh(ratio) / k, 0.0, length);
    double c = alpha * std::cosh(k * t) + beta * std::sinh(k * t);
    if (c < 1.0) c = 1.0;
    return std::acosh(c) / k;
}

double segment_distance(const ModelSpace& space, const HPoint& p, const HPoint& a,
                        const HPoint& b) {
    const HTangent t = log_map(space, a, b);
    const double len = tangent_norm(t);
    if (len < 1e-15) return distance(space, p, a);
    return segment_distance(space, p, a, Vec(t.v / len), len);
}

double HullCloud::refined_dist(const HPoint& p) const {
    const auto ids = grid->nearest(p, 3);
    if (ids.empty()) return std::numeric_limits<double>::infinity();
    double best = std::numeric_limits<double>::infinity();
    for (int id : ids) best = std::min(best, distance(space, p, grid->point(id)));
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            best = std::min(best, segment_distance(space, p, grid->point(ids[i]), grid->point(ids[j])));
    return best;
}

bool HullCloud::within(const HPoint& p, double eps) const {
    // any support point within eps settles it; otherwise a segment point
    // within eps forces a support endpoint within eps + 2 tol, so a bounded
    // scan rejects far queries before the full nearest-neighbour search
    if (grid->any_within(p, eps)) return true;
    if (!grid->any_within(p, eps + 2.0 * tol)) return false;
    return refined_dist(p) <= eps;
}

namespace {

// In H^2 the hull is the geodesic polygon of the Klein-extreme seeds
// (geodesics are straight chords in the Klein disk, so hyperbolic convexity
// is Euclidean convexity there). Building the polygon and filling it at
// density tol yields the same closure-stable cloud as midpoint iteration at
// a fraction of the cost.
HullCloud build_hull_cloud_2d(const ModelSpace& space, const std::vector<HPoint>& seeds,
                              double tol, std::size_t max_points) {
    struct K {
        double x, y;
        int idx;
    };
    const double k = space.k;
    std::vector<K> kl;
    kl.reserve(seeds.size());
    for (std::size_t i = 0; i < seeds.size(); ++i)
        kl.push_back({seeds[i].x[1] / (k * seeds[i].x[0]), seeds[i].x[2] / (k * seeds[i].x[0]),
                      static_cast<int>(i)});
    std::sort(kl.begin(), kl.end(), [](const K& a, const K& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    kl.erase(std::unique(kl.begin(), kl.end(),
                         [](const K& a, const K& b) { return a.x == b.x && a.y == b.y; }),
             kl.end());

    auto cross = [](const K& o, const K& a, const K& b) {
        return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
    };

    // Andrew monotone chain, counter-clockwise; collinear seeds are dropped
    // (they lie on the boundary segments anyway)
    std::vector<K> hullv;
    if (kl.size() >= 3) {
        std::vector<K> h(2 * kl.size());
        std::size_t m = 0;
        for (std::size_t i = 0; i < kl.size(); ++i) {
            while (m >= 2 && cross(h[m - 2], h[m - 1], kl[i]) <= 0) --m;
            h[m++] = kl[i];
        }
        const std::size_t lower = m + 1;
        for (std::size_t i = kl.size() - 1; i-- > 0;) {
            while (m >= lower && cross(h[m - 2], h[m - 1], kl[i]) <= 0) --m;
            h[m++] = kl[i];
        }
        h.resize(m - 1);
        hullv = std::move(h);
    } else {
        hullv = kl;
    }

    // anchor: Klein barycenter of the hull vertices (inside by convexity)
    Vec mean = Vec::Zero(space.ambient_dim());
    for (const auto& v : hullv) mean += seeds[v.idx].x;
    const HPoint anchor = project_to_model(space, std::move(mean));
    auto grid = std::make_shared<PointGrid>(space, anchor, tol);

    const double h = 0.7 * tol;
    auto add = [&](const HPoint& p) {
        if (grid->size() >= max_points)
            throw HullLimitError("build_hull_cloud: point cap exceeded, achieved tol " +
                                     std::to_string(2.0 * tol),
                                 2.0 * tol);
        if (!grid->any_within(p, 0.35 * h)) grid->insert(p);
    };

    for (const auto& s : seeds) add(s);
    // boundary chains between consecutive vertices
    for (std::size_t i = 0; i < hullv.size() && hullv.size() >= 2; ++i) {
        const HPoint& a = seeds[hullv[i].idx];
        const HPoint& b = seeds[hullv[(i + 1) % hullv.size()].idx];
        const double d = distance(space, a, b);
        const int steps = std::max(1, static_cast<int>(std::ceil(d / h)));
        for (int s = 1; s < steps; ++s) add(geodesic_point(space, a, b, static_cast<double>(s) / steps));
        if (hullv.size() == 2) break;
    }
    if (hullv.size() >= 3) {
        // interior fill: polar rings around the anchor clipped to the polygon
        auto inside = [&](const HPoint& p) {
            const double px = p.x[1] / (k * p.x[0]);
            const double py = p.x[2] / (k * p.x[0]);
            for (std::size_t i = 0; i < hullv.size(); ++i) {
                const K& a = hullv[i];
                const K& b = hullv[(i + 1) % hullv.size()];
                if ((b.x - a.x) * (py - a.y) - (b.y - a.y) * (px - a.x) < -1e-13) return false;
            }
            return true;
        };
        double rmax = 0.0;
        for (const auto& v : hullv) rmax = std::max(rmax, distance(space, anchor, seeds[v.idx]));
        for (const HPoint& p : ball_point_grid(space, anchor, rmax, h))
            if (inside(p)) add(p);
    }
    return HullCloud{space, tol, std::move(grid)};
}

} // namespace

HullCloud build_hull_cloud(const ModelSpace& space, const std::vector<HPoint>& seeds,
                           double tol, std::size_t max_points) {
    if (seeds.empty()) throw std::invalid_argument("build_hull_cloud: need at least one seed");
    if (!(tol > 0.0)) throw std::invalid_argument("build_hull_cloud: tol must be positive");
    if (space.dim == 2) return build_hull_cloud_2d(space, seeds, tol, max_points);

    // anchor at the normalized Minkowski mean of the seeds
    Vec mean = Vec::Zero(space.ambient_dim());
    for (const auto& s : seeds) mean += s.x;
    const HPoint anchor = project_to_model(space, std::move(mean));

    auto grid = std::make_shared<PointGrid>(space, anchor, tol);
    for (const auto& s : seeds) {
        if (!grid->any_within(s, 1e-12)) grid->insert(s);
    }

    const double close_enough = 2.0 * tol;  // midpoint of a short pair is within tol of an endpoint
    // Every unordered pair is visited exactly once even though the cloud
    // grows during the sweep; once a pair's midpoint is covered it stays
    // covered, so a single visit suffices.
    for (std::size_t i = 1; i < grid->size(); ++i) {
        const HPoint pi = grid->point(static_cast<int>(i));
        for (std::size_t j = 0; j < i; ++j) {
            const HPoint& pj = grid->point(static_cast<int>(j));
            if (distance(space, pi, pj) <= close_enough) continue;
            const HPoint mid = geodesic_midpoint(space, pi, pj);
            if (!grid->any_within(mid, tol)) {
                if (grid->size() >= max_points) {
                    // estimate the density actually reached from a sample of
                    // unprocessed midpoints
                    double achieved = tol;
                    for (std::size_t s = 0; s < 512; ++s) {
                        const std::size_t a = (s * 2654435761u) % grid->size();
                        const std::size_t b = (s * 40503u + 12345u) % grid->size();
                        if (a == b) continue;
                        const HPoint m = geodesic_midpoint(space, grid->point(static_cast<int>(a)),
                                                           grid->point(static_cast<int>(b)));
                        achieved = std::max(achieved, grid->nearest_dist(m));
                    }
                    throw HullLimitError("build_hull_cloud: point cap exceeded, achieved tol " +
                                             std::to_string(achieved),
                                         achieved);
                }
                grid->insert(mid);
            }
        }
    }
    return HullCloud{space, tol, std::move(grid)};
}

} // namespace hada
