#pragma once

#include "hadamard/envelope.hpp"
#include "hadamard/sets.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace hada {

struct VolumeEstimate {
    double value = 0.0;
    double stderr_ = 0.0;
    std::int64_t samples = 0;
    double bounding_volume = 0.0;
    bool low_confidence = false;  // zero hits, stderr from the rule of three
};

/// Riemannian volume of a geodesic ball:
/// omega_{n-1} * integral_0^r (sinh(k t)/k)^(n-1) dt, 256-node Gauss-Legendre.
double ball_volume(const ModelSpace& space, double r);

/// Boundary area omega_{n-1} (sinh(k r)/k)^(n-1).
double ball_surface(const ModelSpace& space, double r);

/// Surface area of the unit sphere S^(n-1).
double unit_sphere_area(int n);

/// Hit-or-miss estimate inside the set's bounding ball. Deterministic for a
/// fixed seed (chunked substreams, fixed chunk size). Requires a bounded set
/// and samples >= 1000.
VolumeEstimate mc_volume(const ModelSpace& space, const SetRep& s, std::int64_t samples,
                         RngStream& rng);

/// Per-delta (delta, Vol(N(s,delta) - s) / delta). Deltas must be positive
/// and decreasing. Bounded ratios across deltas witness the shell-volume
/// linearity of convex sets.
std::vector<std::pair<double, double>> shell_volume_ratio(const ModelSpace& space, const SetRep& s,
                                                          const std::vector<double>& deltas,
                                                          std::int64_t samples, RngStream& rng);

/**
 * Monte Carlo split of the envelope volume into the far tube around the ray
 * beyond B(ray_start, eta) (g1 part), the cap inside B(ray_start, eta)
 * (g2 part), and the remainder near the base hull (g3 part). Classification
 * outside the ball is by which of ray/base hull is nearer.
 */
struct GDecomposition {
    VolumeEstimate tube;       // G1
    VolumeEstimate cap;        // G2
    VolumeEstimate remainder;  // G3
    VolumeEstimate total;
};

GDecomposition decompose_G_volumes(const ModelSpace& space, const EnvelopeSpec& env, double eta,
                                   std::int64_t samples, RngStream& rng);

} // namespace hada
