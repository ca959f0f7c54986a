#include "hadamard/envelope.hpp"

#include "hadamard/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace hada {

EnvelopeSpec make_envelope_spec(const ModelSpace& space, SetRep base_hull, const HPoint& ray_start,
                                const HTangent& ray_dir, double decay, double k1,
                                double ray_length) {
    if (base_hull.support_points().empty())
        throw std::invalid_argument("make_envelope_spec: base hull has empty support");
    if (std::abs(tangent_norm(ray_dir) - 1.0) > 1e-9)
        throw std::invalid_argument("make_envelope_spec: ray direction must be unit");
    if (std::abs(minkowski_form(ray_start.x, ray_dir.v)) > 1e-9)
        throw std::invalid_argument("make_envelope_spec: ray direction not based at ray start");
    if (!(ray_length > 0.0)) throw std::invalid_argument("make_envelope_spec: ray length <= 0");
    if (!(decay > 0.0) || !decay_feasible(decay, k1))
        throw std::invalid_argument("make_envelope_spec: decay constant infeasible for k1");
    EnvelopeSpec env;
    env.base_hull = std::move(base_hull);
    env.ray_start = ray_start;
    env.ray_dir = ray_dir;
    env.ray_length = ray_length;
    env.decay = decay;
    env.k1 = k1;
    return env;
}

double g1(const ModelSpace& space, const EnvelopeSpec& env, const HPoint& p) {
    (void)space;
    return 1.0 - std::exp(-env.decay * env.base_hull.dist(p));
}

double g2(const ModelSpace& space, const EnvelopeSpec& env, const HPoint& p) {
    const double d = segment_distance(space, p, env.ray_start, env.ray_dir.v, env.ray_length);
    return 1.0 - std::exp(-env.decay * d);
}

double envelope_g_sum(const ModelSpace& space, const EnvelopeSpec& env, const HPoint& p) {
    return g1(space, env, p) + g2(space, env, p);
}

bool envelope_membership(const ModelSpace& space, const EnvelopeSpec& env, const HPoint& p) {
    return envelope_g_sum(space, env, p) <= 1.0;
}

void envelope_bounding(const ModelSpace& space, const EnvelopeSpec& env, HPoint& center,
                       double& radius) {
    Vec dir = env.ray_dir.v;
    const HPoint ray_end = exp_map(space, env.ray_start, Vec(env.ray_length * dir));
    center = geodesic_midpoint(space, env.base_hull.bounding_center, ray_end);
    double r = distance(space, center, env.base_hull.bounding_center) + env.base_hull.bounding_radius;
    r = std::max(r, distance(space, center, env.ray_start));
    r = std::max(r, distance(space, center, ray_end));
    radius = r + std::log(2.0) / env.decay + 0.1;
}

SetRep envelope_set(const ModelSpace& space, const EnvelopeSpec& env, double support_spacing) {
    if (!(support_spacing > 0.0))
        throw std::invalid_argument("envelope_set: support spacing must be positive");
    SetRep s;
    s.kind = SetKind::envelope;
    s.space = space;
    s.env = std::make_shared<EnvelopeSpec>(env);
    envelope_bounding(space, env, s.bounding_center, s.bounding_radius);

    auto grid = std::make_shared<PointGrid>(space, s.bounding_center, support_spacing);
    // guaranteed witnesses: the ray and the base hull support
    const int ray_steps = std::max(2, static_cast<int>(std::ceil(env.ray_length / support_spacing)));
    for (int i = 0; i <= ray_steps; ++i) {
        const double t = env.ray_length * i / ray_steps;
        grid->insert(exp_map(space, env.ray_start, Vec(t * env.ray_dir.v)));
    }
    for (const auto& p : env.base_hull.support_points())
        if (!grid->any_within(p, 1e-9)) grid->insert(p);
    // membership-filtered fill of the bounding ball
    for (const auto& p : ball_point_grid(space, s.bounding_center, s.bounding_radius, support_spacing))
        if (envelope_membership(space, env, p) && !grid->any_within(p, 0.5 * support_spacing))
            grid->insert(p);

    s.cloud = std::make_shared<HullCloud>(HullCloud{space, support_spacing, std::move(grid)});
    return s;
}

double second_difference_probe(const ModelSpace& space, const EnvelopeSpec& env, const HPoint& p,
                               const HTangent& x, double h) {
    if (std::abs(envelope_g_sum(space, env, p) - 1.0) > 1e-3)
        throw std::invalid_argument("second_difference_probe: point not near the envelope boundary");
    if (!(h >= 1e-4 && h <= 1e-2))
        throw std::invalid_argument("second_difference_probe: step size outside [1e-4, 1e-2]");
    if (std::abs(tangent_norm(x) - 1.0) > 1e-6)
        throw std::invalid_argument("second_difference_probe: direction must be unit");
    const double g0 = envelope_g_sum(space, env, p);
    const double gp = envelope_g_sum(space, env, exp_map(space, p, Vec(h * x.v)));
    const double gm = envelope_g_sum(space, env, exp_map(space, p, Vec(-h * x.v)));
    return (gp - 2.0 * g0 + gm) / (h * h);
}

HPoint envelope_boundary_point(const ModelSpace& space, const EnvelopeSpec& env, RngStream& rng,
                               double tol) {
    const double reach = std::log(2.0) / env.decay;
    for (int attempt = 0; attempt < 64; ++attempt) {
        const double t0 = rng.uniform(0.0, env.ray_length);
        const HPoint start = exp_map(space, env.ray_start, Vec(t0 * env.ray_dir.v));
        const auto basis = tangent_basis(space, start);
        Vec dir = Vec::Zero(space.ambient_dim());
        double n2 = 0.0;
        for (int d = 0; d < space.dim; ++d) {
            const double g = rng.normal();
            dir += g * basis[d];
            n2 += g * g;
        }
        if (n2 < 1e-24) continue;
        dir /= std::sqrt(n2);

        double lo = 0.0, hi = 0.5;
        bool bracketed = false;
        const double cap = env.ray_length + 4.0 * reach + 2.0 * env.base_hull.bounding_radius;
        while (hi < cap) {
            if (envelope_g_sum(space, env, exp_map(space, start, Vec(hi * dir))) > 1.0) {
                bracketed = true;
                break;
            }
            lo = hi;
            hi *= 2.0;
        }
        if (!bracketed) continue;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            const HPoint pm = exp_map(space, start, Vec(mid * dir));
            const double g = envelope_g_sum(space, env, pm);
            if (std::abs(g - 1.0) <= tol) return pm;
            (g > 1.0 ? hi : lo) = mid;
        }
        return exp_map(space, start, Vec(0.5 * (lo + hi) * dir));
    }
    throw std::runtime_error("envelope_boundary_point: failed to bracket the boundary");
}

namespace {
Vec numeric_gradient(const ModelSpace& space, const EnvelopeSpec& env, const HPoint& p) {
    const auto basis = tangent_basis(space, p);
    const double h = 1e-5;
    Vec grad = Vec::Zero(space.ambient_dim());
    for (int i = 0; i < space.dim; ++i) {
        const double gp = envelope_g_sum(space, env, exp_map(space, p, Vec(h * basis[i])));
        const double gm = envelope_g_sum(space, env, exp_map(space, p, Vec(-h * basis[i])));
        grad += ((gp - gm) / (2.0 * h)) * basis[i];
    }
    return grad;
}
} // namespace

HTangent envelope_boundary_tangent(const ModelSpace& space, const EnvelopeSpec& env,
                                   const HPoint& p, RngStream& rng) {
    const Vec grad = numeric_gradient(space, env, p);
    const double gn2 = minkowski_form(grad, grad);
    const auto basis = tangent_basis(space, p);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Vec v = Vec::Zero(space.ambient_dim());
        for (int i = 0; i < space.dim; ++i) v += rng.normal() * basis[i];
        if (gn2 > 1e-18) v -= (minkowski_form(v, grad) / gn2) * grad;
        const double n2 = minkowski_form(v, v);
        if (n2 > 1e-12) return HTangent{p, Vec(v / std::sqrt(n2))};
    }
    throw std::runtime_error("envelope_boundary_tangent: degenerate tangent construction");
}

HTangent envelope_boundary_normal(const ModelSpace& space, const EnvelopeSpec& env,
                                  const HPoint& p) {
    Vec grad = numeric_gradient(space, env, p);
    const double n2 = minkowski_form(grad, grad);
    if (n2 < 1e-18)
        throw std::runtime_error("envelope_boundary_normal: vanishing gradient");
    return HTangent{p, Vec(grad / std::sqrt(n2))};
}

} // namespace hada
