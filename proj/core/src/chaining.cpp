#include "hadamard/chaining.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hada {

FiniteMetricSpace FiniteMetricSpace::from_matrix(Eigen::MatrixXd m,
                                                 std::vector<std::string> labels) {
    const auto n = m.rows();
    if (n == 0 || m.cols() != n)
        throw std::invalid_argument("FiniteMetricSpace: matrix must be square and nonempty");
    for (Eigen::Index i = 0; i < n; ++i) {
        if (std::abs(m(i, i)) > 1e-12)
            throw std::invalid_argument("FiniteMetricSpace: nonzero diagonal");
        for (Eigen::Index j = 0; j < n; ++j) {
            if (m(i, j) < 0.0) throw std::invalid_argument("FiniteMetricSpace: negative distance");
            if (std::abs(m(i, j) - m(j, i)) > 1e-12)
                throw std::invalid_argument("FiniteMetricSpace: asymmetric matrix");
        }
    }
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index k = 0; k < n; ++k)
                if (m(i, k) > m(i, j) + m(j, k) + 1e-9)
                    throw std::invalid_argument("FiniteMetricSpace: triangle inequality violated");

    FiniteMetricSpace fms;
    if (labels.empty()) {
        labels.reserve(n);
        for (Eigen::Index i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    } else if (static_cast<Eigen::Index>(labels.size()) != n) {
        throw std::invalid_argument("FiniteMetricSpace: label count mismatch");
    }
    fms.labels = std::move(labels);
    fms.d = std::move(m);
    return fms;
}

FiniteMetricSpace FiniteMetricSpace::from_points(const ModelSpace& space,
                                                 const std::vector<HPoint>& pts) {
    Eigen::MatrixXd m(pts.size(), pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        m(i, i) = 0.0;
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            m(i, j) = m(j, i) = distance(space, pts[i], pts[j]);
    }
    return from_matrix(std::move(m));
}

double FiniteMetricSpace::diameter() const {
    return size() == 0 ? 0.0 : d.maxCoeff();
}

double sequence_value(const FiniteMetricSpace& fms,
                      const std::vector<std::vector<std::vector<int>>>& partitions, double alpha) {
    std::vector<double> acc(fms.size(), 0.0);
    for (std::size_t level = 0; level < partitions.size(); ++level) {
        const double w = std::pow(2.0, static_cast<double>(level) / alpha);
        for (const auto& part : partitions[level]) {
            double diam = 0.0;
            for (std::size_t i = 0; i < part.size(); ++i)
                for (std::size_t j = i + 1; j < part.size(); ++j)
                    diam = std::max(diam, fms.dist(part[i], part[j]));
            for (int id : part) acc[id] += w * diam;
        }
    }
    return acc.empty() ? 0.0 : *std::max_element(acc.begin(), acc.end());
}

namespace {

// Per-part center budget keeping |A_n| <= 2^(2^n): 4 at level 1 (single
// parent), 2^(2^(n-1)) per parent at level n, since the parent level already
// satisfies |A_(n-1)| <= 2^(2^(n-1)).
std::size_t level_budget(std::size_t level) {
    if (level <= 1) return 4;
    const std::size_t e = std::size_t{1} << (level - 1);  // 2^(level-1)
    if (e >= 63) return std::numeric_limits<std::size_t>::max();
    return std::size_t{1} << e;
}

std::vector<std::vector<int>> split_part(const FiniteMetricSpace& fms, const std::vector<int>& part,
                                         std::size_t budget) {
    if (part.size() <= 1 || budget <= 1) return {part};
    const FarthestPointOrder fp = farthest_point_order(
        part.size(), [&](int i, int j) { return fms.dist(part[i], part[j]); }, 0.0,
        std::min(budget, part.size()));
    std::vector<int> centers = fp.order;
    std::vector<std::vector<int>> children(centers.size());
    for (std::size_t i = 0; i < part.size(); ++i) {
        std::size_t best = 0;
        double bd = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < centers.size(); ++c) {
            const double dd = fms.dist(part[i], part[centers[c]]);
            // ties to the lowest point index
            if (dd < bd || (dd == bd && part[centers[c]] < part[centers[best]])) {
                bd = dd;
                best = c;
            }
        }
        children[best].push_back(part[i]);
    }
    std::vector<std::vector<int>> out;
    for (auto& ch : children)
        if (!ch.empty()) out.push_back(std::move(ch));
    return out;
}

} // namespace

AdmissibleSequence greedy_gamma(const FiniteMetricSpace& fms, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("greedy_gamma: alpha must be positive");
    if (fms.size() == 0) throw std::invalid_argument("greedy_gamma: empty space");

    AdmissibleSequence seq;
    seq.alpha = alpha;
    std::vector<int> all(fms.size());
    for (std::size_t i = 0; i < fms.size(); ++i) all[i] = static_cast<int>(i);
    seq.partitions.push_back({all});

    for (std::size_t level = 1; level < 40; ++level) {
        const auto& prev = seq.partitions.back();
        bool all_singletons = true;
        for (const auto& part : prev)
            if (part.size() > 1) all_singletons = false;
        if (all_singletons) break;

        std::vector<std::vector<int>> next;
        for (const auto& part : prev) {
            auto children = split_part(fms, part, level_budget(level));
            for (auto& ch : children) next.push_back(std::move(ch));
        }
        seq.partitions.push_back(std::move(next));
    }
    seq.value = sequence_value(fms, seq.partitions, alpha);
    return seq;
}

namespace {

// Enumerate partitions of {0..n-1} into at most 4 nonempty parts, tracking
// the max part diameter; canonical assignment order avoids duplicates.
void enumerate_level1(const FiniteMetricSpace& fms, std::size_t idx,
                      std::vector<std::vector<int>>& parts, double worst, double& best) {
    if (worst >= best) return;
    if (idx == fms.size()) {
        best = std::min(best, worst);
        return;
    }
    for (std::size_t p = 0; p < parts.size(); ++p) {
        double w = worst;
        for (int other : parts[p]) w = std::max(w, fms.dist(static_cast<int>(idx), other));
        parts[p].push_back(static_cast<int>(idx));
        enumerate_level1(fms, idx + 1, parts, w, best);
        parts[p].pop_back();
    }
    if (parts.size() < 4) {
        parts.push_back({static_cast<int>(idx)});
        enumerate_level1(fms, idx + 1, parts, worst, best);
        parts.pop_back();
    }
}

} // namespace

double exact_gamma_small(const FiniteMetricSpace& fms, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("exact_gamma_small: alpha must be positive");
    const std::size_t n = fms.size();
    if (n == 0) throw std::invalid_argument("exact_gamma_small: empty space");
    if (n > 6) throw std::invalid_argument("exact_gamma_small: more than 6 points");
    if (n == 1) return 0.0;

    // |A_2| <= 16 >= n, so the optimal chain is singletons from level 2 on
    // (zero cost there); only the level-1 partition into <= 4 parts matters:
    // value = diam + 2^(1/alpha) * max part diameter.
    double best_split = std::numeric_limits<double>::infinity();
    std::vector<std::vector<int>> parts;
    parts.push_back({0});
    enumerate_level1(fms, 1, parts, 0.0, best_split);
    return fms.diameter() + std::pow(2.0, 1.0 / alpha) * best_split;
}

std::vector<double> dudley_default_grid(double diam, int size) {
    std::vector<double> g;
    g.push_back(0.0);
    for (int i = 0; i < size; ++i)
        g.push_back(diam / 256.0 * std::pow(256.0, static_cast<double>(i) / (size - 1)));
    return g;
}

double dudley_integral(const FiniteMetricSpace& fms, double alpha, std::vector<double> grid) {
    if (!(alpha > 0.0)) throw std::invalid_argument("dudley_integral: alpha must be positive");
    if (fms.size() <= 1) return 0.0;
    const double diam = fms.diameter();
    if (diam <= 0.0) return 0.0;

    if (grid.empty()) grid = dudley_default_grid(diam);
    std::sort(grid.begin(), grid.end());
    if (grid.front() > 0.0) grid.insert(grid.begin(), 0.0);
    if (grid.back() < diam) grid.push_back(diam);

    const FarthestPointOrder fp =
        farthest_point_order(fms.size(), [&](int i, int j) { return fms.dist(i, j); });
    auto integrand = [&](double eps) {
        const int count = eps <= 0.0 ? fp.cover_count(0.0) : fp.cover_count(eps);
        return count > 1 ? std::pow(std::log(static_cast<double>(count)), 1.0 / alpha) : 0.0;
    };

    double total = 0.0;
    double prev_eps = grid[0];
    double prev_f = integrand(prev_eps);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double f = integrand(grid[i]);
        total += 0.5 * (prev_f + f) * (grid[i] - prev_eps);
        prev_eps = grid[i];
        prev_f = f;
    }
    return total;
}

GaussianIndexSet GaussianIndexSet::from_vectors(std::vector<Eigen::VectorXd> vecs) {
    if (vecs.empty()) throw std::invalid_argument("GaussianIndexSet: empty vector list");
    for (const auto& v : vecs)
        if (v.size() != vecs.front().size())
            throw std::invalid_argument("GaussianIndexSet: inconsistent dimensions");
    GaussianIndexSet g;
    g.vectors = std::move(vecs);
    return g;
}

FiniteMetricSpace GaussianIndexSet::metric() const {
    Eigen::MatrixXd m(vectors.size(), vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        m(i, i) = 0.0;
        for (std::size_t j = i + 1; j < vectors.size(); ++j)
            m(i, j) = m(j, i) = (vectors[i] - vectors[j]).norm();
    }
    return FiniteMetricSpace::from_matrix(std::move(m));
}

SupEstimate gaussian_sup_mc(const GaussianIndexSet& gset, std::int64_t trials, RngStream& rng) {
    if (trials < 1000) throw std::invalid_argument("gaussian_sup_mc: need trials >= 1000");
    const Eigen::Index dim = gset.vectors.front().size();
    Eigen::VectorXd g(dim);
    double sum = 0.0, sum2 = 0.0;
    for (std::int64_t t = 0; t < trials; ++t) {
        for (Eigen::Index i = 0; i < dim; ++i) g[i] = rng.normal();
        double sup = -std::numeric_limits<double>::infinity();
        for (const auto& v : gset.vectors) sup = std::max(sup, v.dot(g));
        sum += sup;
        sum2 += sup * sup;
    }
    SupEstimate e;
    e.trials = trials;
    e.mean_sup = sum / trials;
    const double var = std::max(0.0, sum2 / trials - e.mean_sup * e.mean_sup);
    e.stderr_ = std::sqrt(var / trials);
    return e;
}

FerniqueBand fernique_band(const GaussianIndexSet& gset, double alpha, std::int64_t trials,
                           RngStream& rng) {
    FerniqueBand band;
    const FiniteMetricSpace fms = gset.metric();
    if (fms.diameter() <= 0.0) {
        band.degenerate = true;
        band.reason = "all index vectors coincide, band undefined";
        return band;
    }
    band.gamma_greedy = greedy_gamma(fms, alpha).value;
    const SupEstimate sup = gaussian_sup_mc(gset, trials, rng);
    band.mean_sup = sup.mean_sup;
    band.sup_stderr = sup.stderr_;
    if (!(band.mean_sup > 0.0)) {
        band.degenerate = true;
        band.reason = "nonpositive mean supremum, band undefined";
        return band;
    }
    band.l_upper = band.gamma_greedy / band.mean_sup;
    band.l_lower = band.mean_sup / band.gamma_greedy;
    return band;
}

} // namespace hada
