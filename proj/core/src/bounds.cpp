#include "hadamard/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hada {

void ScenarioParams::validate() const {
    if (n < 2) throw std::invalid_argument("ScenarioParams: n must be >= 2");
    if (!(k1 >= 1.0)) throw std::invalid_argument("ScenarioParams: k1 must be >= 1");
    if (!(k2 > k1)) throw std::invalid_argument("ScenarioParams: need k2 > k1");
    if (m < 1) throw std::invalid_argument("ScenarioParams: m must be >= 1");
    if (!(rho >= 0.0 && rho <= 1.0)) throw std::invalid_argument("ScenarioParams: rho outside [0,1]");
    if (!(lambda > 0.0 && lambda <= k2))
        throw std::invalid_argument("ScenarioParams: need 0 < lambda <= k2");
    if (!(beta > 0.0)) throw std::invalid_argument("ScenarioParams: beta must be positive");
    if (!(alpha > 0.0)) throw std::invalid_argument("ScenarioParams: alpha must be positive");
}

bool decay_feasible(double a, double k1) {
    if (!(a > 0.0) || !(k1 >= 1.0)) return false;
    const double c = k1 * k1 - 0.5;
    constexpr int kGrid = 10000;
    constexpr double kMax = 20.0;
    for (int j = 1; j <= kGrid; ++j) {
        const double t = kMax * j / kGrid;
        if (std::tanh(t) >= 0.5 * t) {
            if (!(2.0 * a * a * t < c * std::tanh(t))) return false;
        }
        if (std::exp(-a * t) <= 0.5) {
            if (!(2.0 * a * std::exp(-a * t) / c < 0.5)) return false;
        }
    }
    return true;
}

double find_a(double k1) {
    if (!(k1 >= 1.0)) throw std::invalid_argument("find_a: k1 must be >= 1");
    for (int i = 1000; i >= 1; --i) {
        const double a = i * 1e-3;
        if (decay_feasible(a, k1)) return a;
    }
    throw std::runtime_error("find_a: no feasible decay constant on the grid");
}

double eta_star(std::int64_t m, double rho, int n, double k2, double a) {
    if (m < 2) return 0.0;
    return rho * std::log(static_cast<double>(m)) / ((n - 1) * (k2 + a));
}

double varpi(double rho, double k1, double k2, int n) {
    const double a = find_a(k1);
    return rho * a / ((n - 1) * (k2 + a));
}

VolBounds vol_bounds(const ScenarioParams& params, double c_ub, double c_lb) {
    if (!(c_ub > 0.0 && c_lb > 0.0))
        throw std::invalid_argument("vol_bounds: constants must be positive");
    const double w = varpi(params.rho, params.k1, params.k2, params.n);
    const double upper = c_ub * std::pow(static_cast<double>(params.m), 1.0 + params.rho - w);
    const double lower = c_lb * params.lambda * params.beta / params.k2;
    return {upper, lower};
}

double ratio_R(const ScenarioParams& params, double c_ub, double c_lb) {
    const VolBounds b = vol_bounds(params, c_ub, c_lb);
    if (!(b.lower > 0.0)) throw std::invalid_argument("ratio_R: lower bound is zero");
    return b.upper / b.lower;
}

double factor_L(double R, int n, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("factor_L: alpha must be positive");
    const double r = std::max(R, 1.0);
    const double inner = std::log(r * std::pow(3.0, n)) / std::log(2.0) + 1.0;
    return std::pow(inner, 1.0 / alpha);
}

std::string Flag::str() const {
    switch (state) {
        case FlagState::pass: return "pass";
        case FlagState::fail: return reason.empty() ? "fail" : "fail(" + reason + ")";
        case FlagState::not_assertable:
            return reason.empty() ? "not-assertable" : "not-assertable(" + reason + ")";
    }
    return "unknown";
}

BoundReport evaluate_bounds(const ScenarioParams& params, double c_ub, double c_lb) {
    params.validate();
    BoundReport r;
    r.params = params;
    r.a = find_a(params.k1);
    r.eta = eta_star(params.m, params.rho, params.n, params.k2, r.a);
    r.varpi_value = varpi(params.rho, params.k1, params.k2, params.n);
    r.c_ub = c_ub;
    r.c_lb = c_lb;
    const VolBounds b = vol_bounds(params, c_ub, c_lb);
    r.vol_upper_shape = b.upper;
    r.vol_lower_shape = b.lower;
    r.r_hada = ratio_R(params, c_ub, c_lb);
    r.r_clamped = r.r_hada < 1.0;
    r.l_hada = factor_L(r.r_hada, params.n, params.alpha);
    return r;
}

} // namespace hada
