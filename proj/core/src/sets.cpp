#include "hadamard/sets.hpp"

#include "hadamard/envelope.hpp"
#include "hadamard/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hada {

std::string to_string(SetKind k) {
    switch (k) {
        case SetKind::geodesic_ball: return "geodesic_ball";
        case SetKind::half_space: return "half_space";
        case SetKind::union_set: return "union";
        case SetKind::hull_cloud: return "hull_cloud";
        case SetKind::envelope: return "envelope";
    }
    return "unknown";
}

namespace {

double half_space_signed(const ModelSpace& space, const SetRep& s, const HPoint& p) {
    return std::asinh(space.k * minkowski_form(p.x, s.plane_normal)) / space.k;
}

} // namespace

bool SetRep::contains(const HPoint& p) const {
    switch (kind) {
        case SetKind::geodesic_ball:
            return distance(space, p, center) <= radius;
        case SetKind::half_space:
            return half_space_signed(space, *this, p) <= plane_offset;
        case SetKind::union_set:
            for (const auto& m : members)
                if (m.contains(p)) return true;
            return false;
        case SetKind::hull_cloud:
            return cloud->within(p, std::max(member_tol, fatten));
        case SetKind::envelope:
            if (envelope_membership(space, *env, p)) return true;
            return fatten > 0.0 && cloud && cloud->within(p, fatten);
    }
    return false;
}

double SetRep::dist(const HPoint& p) const {
    switch (kind) {
        case SetKind::geodesic_ball:
            return std::max(0.0, distance(space, p, center) - radius);
        case SetKind::half_space:
            return std::max(0.0, half_space_signed(space, *this, p) - plane_offset);
        case SetKind::union_set: {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& m : members) best = std::min(best, m.dist(p));
            return best;
        }
        case SetKind::hull_cloud:
        case SetKind::envelope:
            if (contains(p)) return 0.0;
            return std::max(0.0, cloud->refined_dist(p) - fatten);
    }
    return 0.0;
}

bool SetRep::within(const HPoint& p, double eps) const {
    switch (kind) {
        case SetKind::geodesic_ball:
        case SetKind::half_space:
            return dist(p) <= eps;
        case SetKind::union_set:
            for (const auto& m : members)
                if (m.within(p, eps)) return true;
            return false;
        case SetKind::hull_cloud:
            return cloud->within(p, std::max(member_tol, fatten) + eps);
        case SetKind::envelope:
            if (envelope_membership(space, *env, p)) return true;
            return cloud && cloud->within(p, fatten + eps);
    }
    return false;
}

const std::vector<HPoint>& SetRep::support_points() const {
    if (cloud) return cloud->points();
    return support;
}

double dist_to_set(const ModelSpace& space, const HPoint& p, const SetRep& s) {
    (void)space;
    if (s.support_points().empty())
        throw std::invalid_argument("dist_to_set: set has empty support");
    return s.dist(p);
}

std::vector<HPoint> ball_point_grid(const ModelSpace& space, const HPoint& center, double radius,
                                    double spacing) {
    if (!(spacing > 0.0)) throw std::invalid_argument("ball_point_grid: spacing must be positive");
    std::vector<HPoint> out;
    const auto basis = tangent_basis(space, center);
    const double k = space.k;
    const int rings = std::max(1, static_cast<int>(std::ceil(radius / spacing)));

    auto shell_radii = [&](int j) { return j == rings ? radius : spacing * j; };

    if (space.dim == 2) {
        out.push_back(center);
        for (int j = 1; j <= rings; ++j) {
            const double rho = shell_radii(j);
            const double circ = 2.0 * M_PI * std::sinh(k * rho) / k;
            const int cnt = std::max(3, static_cast<int>(std::ceil(circ / spacing)));
            const double off = 0.399963 * j;  // stagger consecutive rings
            for (int i = 0; i < cnt; ++i) {
                const double th = 2.0 * M_PI * i / cnt + off;
                Vec v = rho * (std::cos(th) * basis[0] + std::sin(th) * basis[1]);
                out.push_back(exp_map(space, center, v));
            }
        }
    } else if (space.dim == 3) {
        out.push_back(center);
        const double golden = M_PI * (3.0 - std::sqrt(5.0));
        for (int j = 1; j <= rings; ++j) {
            const double rho = shell_radii(j);
            const double sr = std::sinh(k * rho) / k;
            const int cnt = std::max(4, static_cast<int>(std::ceil(4.0 * M_PI * sr * sr /
                                                                   (spacing * spacing))));
            for (int i = 0; i < cnt; ++i) {
                const double z = 1.0 - 2.0 * (i + 0.5) / cnt;
                const double rxy = std::sqrt(std::max(0.0, 1.0 - z * z));
                const double th = golden * i;
                Vec v = rho * (rxy * std::cos(th) * basis[0] + rxy * std::sin(th) * basis[1] +
                               z * basis[2]);
                out.push_back(exp_map(space, center, v));
            }
        }
    } else {
        // no structured grid above dim 3; fixed-seed fill at matching density
        RngStream rng(0x5eed0000u + static_cast<std::uint64_t>(space.dim));
        BallSampler sampler(space, center, radius);
        const double vol_scale = std::pow(std::sinh(k * radius) / k, space.dim);
        const std::size_t cnt = std::min<std::size_t>(
            200000, static_cast<std::size_t>(8.0 * vol_scale / std::pow(spacing, space.dim)) + 1);
        out.push_back(center);
        for (std::size_t i = 0; i < cnt; ++i) out.push_back(sampler.draw(rng));
    }
    return out;
}

SetRep geodesic_ball_set(const ModelSpace& space, const HPoint& center, double radius,
                         double support_spacing) {
    if (!(radius > 0.0)) throw std::invalid_argument("geodesic_ball_set: radius must be positive");
    SetRep s;
    s.kind = SetKind::geodesic_ball;
    s.space = space;
    s.center = center;
    s.radius = radius;
    s.support = ball_point_grid(space, center, radius, support_spacing);
    s.bounding_center = center;
    s.bounding_radius = radius;
    return s;
}

SetRep half_space_set(const ModelSpace& space, const HPoint& boundary_point,
                      const HTangent& outward_normal) {
    const double nn = tangent_norm(outward_normal);
    if (!(nn > 0.0)) throw std::invalid_argument("half_space_set: zero normal");
    SetRep s;
    s.kind = SetKind::half_space;
    s.space = space;
    s.plane_normal = outward_normal.v / nn;
    if (std::abs(minkowski_form(boundary_point.x, s.plane_normal)) > 1e-9)
        throw std::invalid_argument("half_space_set: normal not tangent at boundary point");
    s.plane_offset = 0.0;
    s.support.push_back(boundary_point);
    for (double t : {0.5, 1.0, 2.0}) {
        Vec v = -t * s.plane_normal;
        s.support.push_back(exp_map(space, boundary_point, v));
    }
    s.bounding_center = boundary_point;
    s.bounding_radius = 2.5;  // covers the support only; the set is unbounded
    return s;
}

SetRep union_of(const ModelSpace& space, std::vector<SetRep> members) {
    if (members.empty()) throw std::invalid_argument("union_of: empty member list");
    SetRep s;
    s.kind = SetKind::union_set;
    s.space = space;
    s.bounding_center = members.front().bounding_center;
    double r = 0.0;
    for (const auto& m : members) {
        r = std::max(r, distance(space, s.bounding_center, m.bounding_center) + m.bounding_radius);
        s.support.insert(s.support.end(), m.support_points().begin(), m.support_points().end());
    }
    s.bounding_radius = r;
    s.members = std::move(members);
    return s;
}

std::vector<SetRep> make_lambda_convex_suite(const ModelSpace& space, int m_rho, double lambda,
                                             const HPoint& common_point, double spread,
                                             RngStream& rng, double support_spacing) {
    if (!(lambda > 0.0) || lambda > space.k)
        throw std::invalid_argument(
            "make_lambda_convex_suite: unsupported configuration, need 0 < lambda <= k");
    if (m_rho < 1) throw std::invalid_argument("make_lambda_convex_suite: m_rho must be >= 1");
    if (spread < 0.5) throw std::invalid_argument("make_lambda_convex_suite: spread must be >= 0.5");

    const auto basis = tangent_basis(space, common_point);
    std::vector<SetRep> suite;
    suite.reserve(m_rho);
    for (int i = 0; i < m_rho; ++i) {
        const double r = rng.uniform(0.5, spread);
        HPoint center = common_point;
        if (m_rho > 1) {
            Vec dir = Vec::Zero(space.ambient_dim());
            double n2 = 0.0;
            for (int d = 0; d < space.dim; ++d) {
                const double g = rng.normal();
                dir += g * basis[d];
                n2 += g * g;
            }
            const double off = rng.uniform(0.0, 0.9 * r);
            if (n2 > 1e-24) {
                dir *= off / std::sqrt(n2);
                center = exp_map(space, common_point, dir);
            }
        }
        suite.push_back(geodesic_ball_set(space, center, r, support_spacing));
    }
    return suite;
}

SetRep geodesic_hull(const ModelSpace& space, const std::vector<HPoint>& seeds, double tol,
                     std::size_t max_points) {
    SetRep s;
    s.kind = SetKind::hull_cloud;
    s.space = space;
    s.cloud = std::make_shared<HullCloud>(build_hull_cloud(space, seeds, tol, max_points));
    s.member_tol = 2.0 * tol;

    Vec mean = Vec::Zero(space.ambient_dim());
    for (const auto& p : seeds) mean += p.x;
    s.bounding_center = project_to_model(space, std::move(mean));
    double r = 0.0;
    for (const auto& p : s.cloud->points())
        r = std::max(r, distance(space, s.bounding_center, p));
    s.bounding_radius = r + s.member_tol;
    return s;
}

SetRep delta_neighborhood(const ModelSpace& space, const SetRep& s, double delta) {
    if (!(delta > 0.0)) throw std::invalid_argument("delta_neighborhood: delta must be positive");
    SetRep out = s;
    out.bounding_radius += delta;
    switch (s.kind) {
        case SetKind::geodesic_ball:
            out.radius += delta;
            break;
        case SetKind::half_space:
            out.plane_offset += delta;
            break;
        case SetKind::union_set: {
            out.members.clear();
            for (const auto& m : s.members) out.members.push_back(delta_neighborhood(space, m, delta));
            break;
        }
        case SetKind::hull_cloud:
        case SetKind::envelope:
            out.fatten += delta;
            break;
    }
    return out;
}

double hull_gap(const ModelSpace& space, const SetRep& t_set, const SetRep& hull, int probes,
                RngStream& rng) {
    (void)rng;  // subsampling is deterministic by stride
    const auto& pts = hull.support_points();
    if (pts.empty()) throw std::invalid_argument("hull_gap: hull has empty support");
    const std::size_t stride = std::max<std::size_t>(1, pts.size() / std::max(1, probes));
    double gap = 0.0;
    for (std::size_t i = 0; i < pts.size(); i += stride)
        gap = std::max(gap, dist_to_set(space, pts[i], t_set));
    return gap;
}

ConvexityReport convexity_probe(const ModelSpace& space, const SetRep& s, int trials,
                                RngStream& rng) {
    if (trials < 1) throw std::invalid_argument("convexity_probe: trials must be >= 1");
    if (!(s.bounding_radius > 0.0))
        throw std::invalid_argument("convexity_probe: set has no usable bounding ball");

    BallSampler sampler(space, s.bounding_center, s.bounding_radius);
    std::size_t tries = 0;
    const std::size_t max_tries = 2000000 + 200ull * static_cast<std::size_t>(trials);
    auto draw_member = [&]() {
        for (;;) {
            if (++tries > max_tries)
                throw std::runtime_error("convexity_probe: membership hit rate too low");
            HPoint p = sampler.draw(rng);
            if (s.contains(p)) return p;
        }
    };

    ConvexityReport rep;
    rep.pairs_tested = trials;
    for (int t = 0; t < trials; ++t) {
        const HPoint p = draw_member();
        const HPoint q = draw_member();
        for (int i = 1; i <= 9; ++i) {
            const HPoint m = geodesic_point(space, p, q, i / 10.0);
            if (s.contains(m)) continue;
            const double depth = s.dist(m);
            rep.worst_depth = std::max(rep.worst_depth, depth);
            if (depth > 1e-4) ++rep.violations;
        }
    }
    return rep;
}

double cloud_diameter(const ModelSpace& space, const std::vector<HPoint>& pts, std::size_t cap) {
    if (pts.empty()) return 0.0;
    const std::size_t stride = std::max<std::size_t>(1, pts.size() / cap);
    std::vector<const HPoint*> sel;
    for (std::size_t i = 0; i < pts.size(); i += stride) sel.push_back(&pts[i]);
    double d = 0.0;
    for (std::size_t i = 0; i < sel.size(); ++i)
        for (std::size_t j = i + 1; j < sel.size(); ++j)
            d = std::max(d, distance(space, *sel[i], *sel[j]));
    return d;
}

} // namespace hada
