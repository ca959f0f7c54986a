#include "hadamard/volumes.hpp"

#include "hadamard/sampling.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace hada {

namespace {

constexpr int kGaussNodes = 256;
constexpr std::int64_t kChunk = 65536;

struct GaussRule {
    std::array<double, kGaussNodes> x, w;  // on [-1, 1]
};

// Nodes by Newton iteration on Legendre polynomials; accurate to ~1e-15.
const GaussRule& gauss_rule() {
    static const GaussRule rule = [] {
        GaussRule r{};
        const int n = kGaussNodes;
        for (int i = 0; i < (n + 1) / 2; ++i) {
            double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            double pp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int j = 2; j <= n; ++j) {
                    const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                    p0 = p1;
                    p1 = p2;
                }
                pp = n * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / pp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            r.x[i] = -x;
            r.x[n - 1 - i] = x;
            r.w[i] = r.w[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
        }
        return r;
    }();
    return rule;
}

} // namespace

double unit_sphere_area(int n) {
    return 2.0 * std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n);
}

double ball_volume(const ModelSpace& space, double r) {
    if (r < 0.0) throw std::invalid_argument("ball_volume: negative radius");
    if (r == 0.0) return 0.0;
    const auto& g = gauss_rule();
    const double k = space.k;
    const int n1 = space.dim - 1;
    double integral = 0.0;
    for (int i = 0; i < kGaussNodes; ++i) {
        const double t = 0.5 * r * (g.x[i] + 1.0);
        integral += g.w[i] * std::pow(std::sinh(k * t) / k, n1);
    }
    integral *= 0.5 * r;
    return unit_sphere_area(space.dim) * integral;
}

double ball_surface(const ModelSpace& space, double r) {
    if (r < 0.0) throw std::invalid_argument("ball_surface: negative radius");
    return unit_sphere_area(space.dim) * std::pow(std::sinh(space.k * r) / space.k, space.dim - 1);
}

namespace {

VolumeEstimate from_hits(std::int64_t hits, std::int64_t samples, double bounding_volume) {
    VolumeEstimate e;
    e.samples = samples;
    e.bounding_volume = bounding_volume;
    const double p = static_cast<double>(hits) / static_cast<double>(samples);
    e.value = p * bounding_volume;
    if (hits == 0) {
        e.stderr_ = bounding_volume * 3.0 / static_cast<double>(samples);
        e.low_confidence = true;
    } else {
        e.stderr_ = bounding_volume * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
    }
    return e;
}

template <class Predicate>
std::int64_t count_hits(const ModelSpace& space, const HPoint& center, double radius,
                        std::int64_t samples, RngStream& rng, Predicate&& pred) {
    BallSampler sampler(space, center, radius);
    std::int64_t hits = 0;
    std::int64_t done = 0;
    std::uint64_t chunk_idx = 0;
    while (done < samples) {
        const std::int64_t batch = std::min<std::int64_t>(kChunk, samples - done);
        RngStream sub = rng.substream(chunk_idx++);
        for (std::int64_t i = 0; i < batch; ++i)
            if (pred(sampler.draw(sub))) ++hits;
        done += batch;
    }
    return hits;
}

} // namespace

VolumeEstimate mc_volume(const ModelSpace& space, const SetRep& s, std::int64_t samples,
                         RngStream& rng) {
    if (samples < 1000) throw std::invalid_argument("mc_volume: need samples >= 1000");
    if (s.kind == SetKind::half_space || !(s.bounding_radius > 0.0))
        throw std::invalid_argument("mc_volume: set has no valid bounding ball");
    const double vb = ball_volume(space, s.bounding_radius);
    const std::int64_t hits = count_hits(space, s.bounding_center, s.bounding_radius, samples, rng,
                                         [&](const HPoint& p) { return s.contains(p); });
    return from_hits(hits, samples, vb);
}

std::vector<std::pair<double, double>> shell_volume_ratio(const ModelSpace& space, const SetRep& s,
                                                          const std::vector<double>& deltas,
                                                          std::int64_t samples, RngStream& rng) {
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        if (!(deltas[i] > 0.0))
            throw std::invalid_argument("shell_volume_ratio: deltas must be positive");
        if (i > 0 && !(deltas[i] < deltas[i - 1]))
            throw std::invalid_argument("shell_volume_ratio: deltas must be decreasing");
    }
    std::vector<std::pair<double, double>> out;
    out.reserve(deltas.size());
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        const double delta = deltas[i];
        const SetRep grown = delta_neighborhood(space, s, delta);
        const double vb = ball_volume(space, grown.bounding_radius);
        RngStream sub = rng.substream(1000 + i);
        const std::int64_t hits =
            count_hits(space, grown.bounding_center, grown.bounding_radius, samples, sub,
                       [&](const HPoint& p) { return grown.contains(p) && !s.contains(p); });
        const VolumeEstimate shell = from_hits(hits, samples, vb);
        out.emplace_back(delta, shell.value / delta);
    }
    return out;
}

GDecomposition decompose_G_volumes(const ModelSpace& space, const EnvelopeSpec& env, double eta,
                                   std::int64_t samples, RngStream& rng) {
    if (!(eta > 0.0)) throw std::invalid_argument("decompose_G_volumes: eta must be positive");
    if (samples < 1000) throw std::invalid_argument("decompose_G_volumes: need samples >= 1000");

    HPoint center;
    double radius = 0.0;
    envelope_bounding(space, env, center, radius);
    const double vb = ball_volume(space, radius);

    BallSampler sampler(space, center, radius);
    std::int64_t tube = 0, cap = 0, rest = 0;
    std::int64_t done = 0;
    std::uint64_t chunk_idx = 0;
    while (done < samples) {
        const std::int64_t batch = std::min<std::int64_t>(kChunk, samples - done);
        RngStream sub = rng.substream(chunk_idx++);
        for (std::int64_t i = 0; i < batch; ++i) {
            const HPoint p = sampler.draw(sub);
            if (!envelope_membership(space, env, p)) continue;
            if (distance(space, p, env.ray_start) <= eta) {
                ++cap;
                continue;
            }
            const double d_ray =
                segment_distance(space, p, env.ray_start, env.ray_dir.v, env.ray_length);
            const double d_hull = env.base_hull.dist(p);
            (d_ray < d_hull ? tube : rest) += 1;
        }
        done += batch;
    }

    GDecomposition d;
    d.tube = from_hits(tube, samples, vb);
    d.cap = from_hits(cap, samples, vb);
    d.remainder = from_hits(rest, samples, vb);
    d.total = from_hits(tube + cap + rest, samples, vb);
    return d;
}

} // namespace hada
