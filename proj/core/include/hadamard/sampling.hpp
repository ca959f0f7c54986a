#pragma once

#include "hadamard/geometry.hpp"
#include "hadamard/rng.hpp"

#include <vector>

namespace hada {

/**
 * Uniform sampler (w.r.t. Riemannian volume) on a geodesic ball.
 *
 * Directions are isotropic in the tangent space at the center; the radius is
 * drawn by inverse CDF of the radial density (sinh(k t)/k)^(n-1) tabulated
 * on a 4096-point grid with linear interpolation between nodes.
 */
class BallSampler {
public:
    BallSampler(const ModelSpace& space, HPoint center, double radius);

    HPoint draw(RngStream& rng) const;

    /// Radius draw alone (used by the radial-moment tests).
    double draw_radius(RngStream& rng) const;

    const HPoint& center() const { return center_; }
    double radius() const { return radius_; }

private:
    ModelSpace space_;
    HPoint center_;
    double radius_;
    std::vector<Vec> basis_;
    std::vector<double> cdf_;  // cdf_[i] at t_i = radius * i / (table
                               // size - 1), normalized to cdf_.back() == 1
};

/// One-shot convenience wrapper; builds the table per call, prefer
/// BallSampler inside loops.
HPoint sample_ball_uniform(const ModelSpace& space, const HPoint& center, double radius,
                           RngStream& rng);

} // namespace hada
