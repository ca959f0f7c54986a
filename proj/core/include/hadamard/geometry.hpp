#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <vector>

namespace hada {

/// Ambient Minkowski vector. Fixed capacity keeps hot loops allocation-free;
/// dimensions above 11 are rejected by ModelSpace.
using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, 12, 1>;

constexpr int kMaxDim = 11;

/// How tightly points are held to the model hyperboloid.
constexpr double kModelTol = 1e-9;

/**
 * The hyperboloid model of n-dimensional hyperbolic space with sectional
 * curvature -k^2, embedded in Minkowski space of signature (-,+,...,+).
 * Points x satisfy <x,x> = -1/k^2 with x0 > 0.
 */
struct ModelSpace {
    int dim;   // n >= 2
    double k;  // curvature scale, sectional curvature is -k^2

    ModelSpace(int n, double curvature_scale);

    int ambient_dim() const { return dim + 1; }
};

/// -x0*y0 + sum_{i>=1} xi*yi. Throws std::invalid_argument on length
/// mismatch or length < 3.
double minkowski_form(const Vec& x, const Vec& y);

struct HPoint {
    Vec x;
};

struct HTangent {
    HPoint base;
    Vec v;
};

/// Rescales coords onto the hyperboloid sheet (x0 > 0). Throws
/// std::domain_error if the input is not timelike with positive x0.
HPoint project_to_model(const ModelSpace& space, Vec coords);

/// The point (1/k, 0, ..., 0).
HPoint origin(const ModelSpace& space);

/// <x,x> + 1/k^2; zero on the model to within kModelTol.
double hyperboloid_residual(const ModelSpace& space, const HPoint& p);

/// Throws std::domain_error when p drifts off the model beyond tol.
void check_on_model(const ModelSpace& space, const HPoint& p, double tol = kModelTol);

/// Geodesic distance (1/k) * arccosh(-k^2 <p,q>). The arccosh argument is
/// clamped to 1 within 1e-9; larger violations throw std::domain_error.
double distance(const ModelSpace& space, const HPoint& p, const HPoint& q);

/// Riemannian norm of a tangent vector (the restricted form is positive
/// definite on tangent spaces).
double tangent_norm(const HTangent& t);

/// Projects an ambient vector onto the tangent space at p.
Vec project_to_tangent(const ModelSpace& space, const HPoint& p, const Vec& w);

/// Point at distance |v| along the geodesic with initial velocity v.
/// Throws std::invalid_argument when v is not based at base.
HPoint exp_map(const ModelSpace& space, const HPoint& base, const HTangent& v);
HPoint exp_map(const ModelSpace& space, const HPoint& base, const Vec& v);

/// Inverse of exp_map; returns the zero tangent when target == base.
HTangent log_map(const ModelSpace& space, const HPoint& base, const HPoint& target);

/// exp_p(t log_p(q)) for t in [0,1]; throws std::invalid_argument outside.
HPoint geodesic_point(const ModelSpace& space, const HPoint& p, const HPoint& q, double t);

/// Midpoint via normalized Minkowski sum (closed form, cheap).
HPoint geodesic_midpoint(const ModelSpace& space, const HPoint& p, const HPoint& q);

/**
 * Minkowski-orthonormal basis of the tangent space at p (n vectors).
 * Deterministic for a given p; used for isotropic tangent sampling and for
 * the log-coordinate charts backing the spatial index.
 */
std::vector<Vec> tangent_basis(const ModelSpace& space, const HPoint& p);

/// Chart mapping points to log-map coordinates at a fixed base point.
/// The map is distance-nonexpanding (|u(p)-u(q)| <= d(p,q)), which makes it
/// a sound pruning device for nearest-neighbour queries.
class TangentChart {
public:
    TangentChart(const ModelSpace& space, const HPoint& base);

    Eigen::Vector3d coords3(const HPoint& p) const;  // n <= 3 fast path
    Vec coords(const HPoint& p) const;

    const HPoint& base() const { return base_; }

private:
    ModelSpace space_;
    HPoint base_;
    std::vector<Vec> basis_;
};

} // namespace hada
