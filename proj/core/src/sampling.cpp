#include "hadamard/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hada {

namespace {
constexpr int kTableSize = 4096;
}

BallSampler::BallSampler(const ModelSpace& space, HPoint center, double radius)
    : space_(space), center_(std::move(center)), radius_(radius), basis_(tangent_basis(space, center_)) {
    if (!(radius > 0.0)) throw std::invalid_argument("BallSampler: radius must be positive");
    cdf_.resize(kTableSize);
    const int n1 = space_.dim - 1;
    const double k = space_.k;
    const double h = radius_ / (kTableSize - 1);
    auto density = [&](double t) { return std::pow(std::sinh(k * t) / k, n1); };
    cdf_[0] = 0.0;
    double prev = density(0.0);
    for (int i = 1; i < kTableSize; ++i) {
        const double cur = density(h * i);
        cdf_[i] = cdf_[i - 1] + 0.5 * (prev + cur) * h;
        prev = cur;
    }
    const double total = cdf_.back();
    for (double& c : cdf_) c /= total;
}

double BallSampler::draw_radius(RngStream& rng) const {
    const double u = rng.uniform01();
    const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
    const std::size_t hi = std::min<std::size_t>(std::max<std::ptrdiff_t>(it - cdf_.begin(), 1), kTableSize - 1);
    const std::size_t lo = hi - 1;
    const double span = cdf_[hi] - cdf_[lo];
    const double frac = span > 0.0 ? (u - cdf_[lo]) / span : 0.0;
    const double h = radius_ / (kTableSize - 1);
    return h * (static_cast<double>(lo) + frac);
}

HPoint BallSampler::draw(RngStream& rng) const {
    const double r = draw_radius(rng);
    // isotropic unit direction in the tangent space
    Vec v = Vec::Zero(space_.ambient_dim());
    double norm2 = 0.0;
    std::vector<double> g(space_.dim);
    do {
        norm2 = 0.0;
        for (int i = 0; i < space_.dim; ++i) {
            g[i] = rng.normal();
            norm2 += g[i] * g[i];
        }
    } while (norm2 < 1e-24);
    const double inv = r / std::sqrt(norm2);
    for (int i = 0; i < space_.dim; ++i) v += (g[i] * inv) * basis_[i];
    return exp_map(space_, center_, v);
}

HPoint sample_ball_uniform(const ModelSpace& space, const HPoint& center, double radius,
                           RngStream& rng) {
    return BallSampler(space, center, radius).draw(rng);
}

} // namespace hada
