#pragma once

#include "hadamard/covering.hpp"
#include "hadamard/geometry.hpp"
#include "hadamard/rng.hpp"

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace hada {

struct FiniteMetricSpace {
    std::vector<std::string> labels;
    Eigen::MatrixXd d;

    /// Validates symmetry, zero diagonal, nonnegativity and the triangle
    /// inequality (1e-9 slack) on all triples.
    static FiniteMetricSpace from_matrix(Eigen::MatrixXd m, std::vector<std::string> labels = {});
    static FiniteMetricSpace from_points(const ModelSpace& space, const std::vector<HPoint>& pts);

    std::size_t size() const { return static_cast<std::size_t>(d.rows()); }
    double dist(int i, int j) const { return d(i, j); }
    double diameter() const;
};

/**
 * Nested partition chain with cardinality caps |A_n| <= 2^(2^n), |A_0| = 1.
 * value = max over points of sum_n 2^(n/alpha) diam(A_n(point)).
 */
struct AdmissibleSequence {
    std::vector<std::vector<std::vector<int>>> partitions;  // level -> parts -> ids
    double alpha = 2.0;
    double value = 0.0;
};

/// Value of a partition chain per the admissible-sequence definition.
double sequence_value(const FiniteMetricSpace& fms, const std::vector<std::vector<std::vector<int>>>& partitions,
                      double alpha);

/**
 * Upper bound on gamma_alpha by greedy construction: each part is split by
 * farthest-point seeding with per-level center budgets that keep the global
 * cardinality caps (4 centers at level 1, 2^(2^(n-1)) per part at level n),
 * points assigned to their nearest center, ties to the lowest point index.
 */
AdmissibleSequence greedy_gamma(const FiniteMetricSpace& fms, double alpha);

/// Exact gamma_alpha for at most 6 points by exhaustive enumeration of
/// admissible chains (levels >= 2 can always go straight to singletons).
double exact_gamma_small(const FiniteMetricSpace& fms, double alpha);

/// Trapezoidal Dudley entropy integral of (log N(eps))^(1/alpha) with greedy
/// covering numbers. An empty grid selects the default (64 log-spaced points
/// from diam down to diam/256, plus the exact endpoints 0 and diam).
double dudley_integral(const FiniteMetricSpace& fms, double alpha,
                       std::vector<double> grid = {});

std::vector<double> dudley_default_grid(double diam, int size = 64);

/// Index set of the Gaussian process X_t = <t, g>, g standard normal.
struct GaussianIndexSet {
    std::vector<Eigen::VectorXd> vectors;

    static GaussianIndexSet from_vectors(std::vector<Eigen::VectorXd> vecs);
    FiniteMetricSpace metric() const;  // pairwise Euclidean distances
};

struct SupEstimate {
    double mean_sup = 0.0;
    double stderr_ = 0.0;
    std::int64_t trials = 0;
};

/// Monte Carlo E sup_t X_t; requires trials >= 1000.
SupEstimate gaussian_sup_mc(const GaussianIndexSet& gset, std::int64_t trials, RngStream& rng);

struct FerniqueBand {
    double gamma_greedy = 0.0;
    double mean_sup = 0.0;
    double sup_stderr = 0.0;
    double l_upper = 0.0;  // gamma / mean_sup
    double l_lower = 0.0;  // mean_sup / gamma
    bool degenerate = false;
    std::string reason;
};

/// Empirical two-sided comparison of gamma_alpha and E sup; degenerate index
/// sets (zero diameter or nonpositive mean sup) are flagged, not asserted.
FerniqueBand fernique_band(const GaussianIndexSet& gset, double alpha, std::int64_t trials,
                           RngStream& rng);

} // namespace hada
