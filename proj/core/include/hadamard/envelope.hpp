#pragma once

#include "hadamard/sets.hpp"

namespace hada {

/**
 * The convex envelope construction: given a base hull and a unit-speed
 * geodesic ray from ray_start, the envelope is
 *
 *     { P : g1(P) + g2(P) <= 1 },
 *     g1(P) = 1 - exp(-a dist(P, base_hull)),
 *     g2(P) = 1 - exp(-a dist(P, ray)),
 *
 * with decay constant a chosen so the construction is convex for the
 * curvature parameter k1 (checked at construction).
 */
struct EnvelopeSpec {
    SetRep base_hull;
    HPoint ray_start;
    HTangent ray_dir;  // unit, based at ray_start
    double ray_length = 50.0;
    double decay = 0.25;
    double k1 = 1.0;
};

/// Validates invariants (unit ray direction based at ray_start to 1e-9,
/// decay feasible for k1) and returns the spec.
EnvelopeSpec make_envelope_spec(const ModelSpace& space, SetRep base_hull, const HPoint& ray_start,
                                const HTangent& ray_dir, double decay, double k1,
                                double ray_length = 50.0);

double g1(const ModelSpace& space, const EnvelopeSpec& env, const HPoint& p);
double g2(const ModelSpace& space, const EnvelopeSpec& env, const HPoint& p);
double envelope_g_sum(const ModelSpace& space, const EnvelopeSpec& env, const HPoint& p);
bool envelope_membership(const ModelSpace& space, const EnvelopeSpec& env, const HPoint& p);

/// Bounding ball for the envelope (the set stays within ln2/a of the base
/// hull union the ray).
void envelope_bounding(const ModelSpace& space, const EnvelopeSpec& env, HPoint& center,
                       double& radius);

/// SetRep with a deterministic support cloud at the given spacing.
SetRep envelope_set(const ModelSpace& space, const EnvelopeSpec& env, double support_spacing = 0.05);

/**
 * Central second difference of g1+g2 at a boundary point p along the unit
 * tangent x: (g(exp(h x)) - 2 g(p) + g(exp(-h x))) / h^2.
 * Requires |g1+g2-1| <= 1e-3 at p and h in [1e-4, 1e-2].
 */
double second_difference_probe(const ModelSpace& space, const EnvelopeSpec& env, const HPoint& p,
                               const HTangent& x, double h);

/// Point with |g1+g2-1| <= tol found by bisection along a random outward
/// geodesic from the ray.
HPoint envelope_boundary_point(const ModelSpace& space, const EnvelopeSpec& env, RngStream& rng,
                               double tol = 1e-6);

/// Unit tangent at p orthogonal to the numeric gradient of g1+g2, i.e.
/// tangent to the envelope boundary.
HTangent envelope_boundary_tangent(const ModelSpace& space, const EnvelopeSpec& env,
                                   const HPoint& p, RngStream& rng);

/// Unit tangent at p along the numeric gradient of g1+g2 (outward normal).
HTangent envelope_boundary_normal(const ModelSpace& space, const EnvelopeSpec& env,
                                  const HPoint& p);

} // namespace hada
