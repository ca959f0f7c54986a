#include "hadamard/geometry.hpp"

#include <cmath>

namespace hada {

ModelSpace::ModelSpace(int n, double curvature_scale) : dim(n), k(curvature_scale) {
    if (n < 2 || n > kMaxDim)
        throw std::invalid_argument("ModelSpace: dim must be in [2, " + std::to_string(kMaxDim) + "]");
    if (!(curvature_scale > 0.0))
        throw std::invalid_argument("ModelSpace: curvature scale must be positive");
}

double minkowski_form(const Vec& x, const Vec& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("minkowski_form: length mismatch");
    if (x.size() < 3)
        throw std::invalid_argument("minkowski_form: need length >= 3");
    double s = -x[0] * y[0];
    for (Eigen::Index i = 1; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

HPoint project_to_model(const ModelSpace& space, Vec coords) {
    if (coords.size() != space.ambient_dim())
        throw std::invalid_argument("project_to_model: wrong ambient dimension");
    const double q = minkowski_form(coords, coords);
    if (!(q < 0.0) || !(coords[0] > 0.0))
        throw std::domain_error("project_to_model: not a future timelike vector");
    coords *= 1.0 / (space.k * std::sqrt(-q));
    return HPoint{std::move(coords)};
}

HPoint origin(const ModelSpace& space) {
    Vec x = Vec::Zero(space.ambient_dim());
    x[0] = 1.0 / space.k;
    return HPoint{std::move(x)};
}

double hyperboloid_residual(const ModelSpace& space, const HPoint& p) {
    return minkowski_form(p.x, p.x) + 1.0 / (space.k * space.k);
}

void check_on_model(const ModelSpace& space, const HPoint& p, double tol) {
    if (p.x.size() != space.ambient_dim())
        throw std::domain_error("check_on_model: wrong ambient dimension");
    if (std::abs(hyperboloid_residual(space, p)) > tol || !(p.x[0] > 0.0))
        throw std::domain_error("check_on_model: point off the hyperboloid");
}

double distance(const ModelSpace& space, const HPoint& p, const HPoint& q) {
    double c = -space.k * space.k * minkowski_form(p.x, q.x);
    if (c < 1.0) {
        if (c < 1.0 - 1e-9)
            throw std::domain_error("distance: arccosh argument below 1 beyond tolerance");
        c = 1.0;
    }
    return std::acosh(c) / space.k;
}

double tangent_norm(const HTangent& t) {
    const double q = minkowski_form(t.v, t.v);
    return q <= 0.0 ? 0.0 : std::sqrt(q);
}

Vec project_to_tangent(const ModelSpace& space, const HPoint& p, const Vec& w) {
    const double k2 = space.k * space.k;
    return w + k2 * minkowski_form(p.x, w) * p.x;
}

HPoint exp_map(const ModelSpace& space, const HPoint& base, const Vec& v) {
    const double q = minkowski_form(v, v);
    const double s = q <= 0.0 ? 0.0 : std::sqrt(q);
    if (s < 1e-15) return base;
    const double t = space.k * s;
    Vec x = std::cosh(t) * base.x + (std::sinh(t) / (space.k * s)) * v;
    return project_to_model(space, std::move(x));
}

HPoint exp_map(const ModelSpace& space, const HPoint& base, const HTangent& v) {
    if (std::abs(minkowski_form(base.x, v.v)) > 1e-6)
        throw std::invalid_argument("exp_map: tangent not based at base point");
    return exp_map(space, base, v.v);
}

HTangent log_map(const ModelSpace& space, const HPoint& base, const HPoint& target) {
    const double k = space.k;
    const double c = -k * k * minkowski_form(base.x, target.x);
    Vec u = target.x - std::max(c, 1.0) * base.x;  // tangent component of target
    if (c <= 1.0 + 1e-13) return HTangent{base, std::move(u)};
    const double d = std::acosh(c) / k;
    u *= d * k / std::sinh(k * d);
    return HTangent{base, std::move(u)};
}

HPoint geodesic_point(const ModelSpace& space, const HPoint& p, const HPoint& q, double t) {
    if (!(t >= 0.0 && t <= 1.0))
        throw std::invalid_argument("geodesic_point: t outside [0,1]");
    if (t == 0.0) return p;
    if (t == 1.0) return q;
    const double k = space.k;
    double c = -k * k * minkowski_form(p.x, q.x);
    if (c <= 1.0) return p;  // coincident points
    const double theta = std::acosh(c);  // = k * distance
    const double s = std::sinh(theta);
    Vec x = (std::sinh((1.0 - t) * theta) * p.x + std::sinh(t * theta) * q.x) / s;
    return project_to_model(space, std::move(x));
}

HPoint geodesic_midpoint(const ModelSpace& space, const HPoint& p, const HPoint& q) {
    Vec sum = p.x + q.x;
    return project_to_model(space, std::move(sum));
}

std::vector<Vec> tangent_basis(const ModelSpace& space, const HPoint& p) {
    const int n = space.dim;
    std::vector<Vec> basis;
    basis.reserve(n);
    // Project the spatial ambient axes and Minkowski-Gram-Schmidt them. The
    // restricted form is positive definite on the tangent space, so this is
    // ordinary Gram-Schmidt once degenerate candidates are skipped.
    for (int axis = 1; axis <= n + 1 && static_cast<int>(basis.size()) < n; ++axis) {
        Vec e = Vec::Zero(space.ambient_dim());
        e[axis % (n + 1)] = 1.0;
        Vec u = project_to_tangent(space, p, e);
        for (const Vec& b : basis) u -= minkowski_form(b, u) * b;
        const double q = minkowski_form(u, u);
        if (q > 1e-12) basis.push_back(u / std::sqrt(q));
    }
    if (static_cast<int>(basis.size()) != n)
        throw std::domain_error("tangent_basis: degenerate basis construction");
    return basis;
}

TangentChart::TangentChart(const ModelSpace& space, const HPoint& base)
    : space_(space), base_(base), basis_(tangent_basis(space, base)) {}

Vec TangentChart::coords(const HPoint& p) const {
    const HTangent t = log_map(space_, base_, p);
    Vec u(space_.dim);
    for (int i = 0; i < space_.dim; ++i) u[i] = minkowski_form(basis_[i], t.v);
    return u;
}

Eigen::Vector3d TangentChart::coords3(const HPoint& p) const {
    const HTangent t = log_map(space_, base_, p);
    Eigen::Vector3d u = Eigen::Vector3d::Zero();
    const int n = std::min(space_.dim, 3);
    for (int i = 0; i < n; ++i) u[i] = minkowski_form(basis_[i], t.v);
    return u;
}

} // namespace hada
