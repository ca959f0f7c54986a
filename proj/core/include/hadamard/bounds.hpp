#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace hada {

/**
 * Scenario inputs shared by the bound formulas and the experiment pipeline.
 * k1 = 1 is admitted as the boundary case; lambda must not exceed k2; beta
 * lower-bounds the generator surface areas.
 */
struct ScenarioParams {
    int n = 2;
    double k1 = 1.0;
    double k2 = 2.0;
    std::int64_t m = 16;
    double rho = 0.5;
    double lambda = 1.0;
    double beta = 1.0;
    double alpha = 2.0;

    void validate() const;  // throws std::invalid_argument on range violations
};

/**
 * Feasibility of the envelope decay constant a for curvature parameter k1,
 * checked pointwise on a 10^4-point grid over (0, 20]:
 *
 *   case I  (tanh tau >= tau/2):   2 a^2 tau < (k1^2 - 1/2) tanh(tau)
 *   case II (exp(-a r) <= 1/2):    2 a exp(-a r) / (k1^2 - 1/2) < 1/2
 *
 * The case II range is exactly the regime where the half-weight bound on
 * the normal component applies.
 */
bool decay_feasible(double a, double k1);

/// Largest feasible a in (0, 1] on a 1e-3 grid. Throws std::runtime_error
/// when no grid value is feasible (cannot happen for k1 >= 1).
double find_a(double k1);

/// eta* = ln(m^rho) / ((n-1)(k2+a)); zero for m < 2.
double eta_star(std::int64_t m, double rho, int n, double k2, double a);

/// varpi = rho a / ((n-1)(k2+a)) with a = find_a(k1).
double varpi(double rho, double k1, double k2, int n);

struct VolBounds {
    double upper;  // c_ub * m^(1+rho-varpi)
    double lower;  // c_lb * lambda * beta / k2
};
VolBounds vol_bounds(const ScenarioParams& params, double c_ub, double c_lb);

/// upper / lower volume-bound ratio; throws std::invalid_argument when the
/// lower bound vanishes.
double ratio_R(const ScenarioParams& params, double c_ub, double c_lb);

/// (log(R 3^n)/log 2 + 1)^(1/alpha); R below 1 is clamped to 1 (the factor
/// must be >= 1).
double factor_L(double R, int n, double alpha);

enum class FlagState { pass, fail, not_assertable };

struct Flag {
    FlagState state = FlagState::not_assertable;
    std::string reason;

    static Flag passed() { return {FlagState::pass, ""}; }
    static Flag failed(std::string why) { return {FlagState::fail, std::move(why)}; }
    static Flag open(std::string why) { return {FlagState::not_assertable, std::move(why)}; }

    std::string str() const;
    bool is_fail() const { return state == FlagState::fail; }
};

/// Evaluated constants for one scenario; measured counterparts are NaN
/// until an experiment fills them in.
struct BoundReport {
    ScenarioParams params;
    double a = 0.0;
    double eta = 0.0;
    double varpi_value = 0.0;
    double c_ub = 1.0;
    double c_lb = 1.0;
    double vol_upper_shape = 0.0;
    double vol_lower_shape = 0.0;
    double r_hada = 0.0;
    double l_hada = 0.0;
    bool r_clamped = false;

    double measured_vol_t = std::numeric_limits<double>::quiet_NaN();
    double measured_vol_th = std::numeric_limits<double>::quiet_NaN();
    double measured_beta = std::numeric_limits<double>::quiet_NaN();
    double measured_cover_ratio = std::numeric_limits<double>::quiet_NaN();
    double measured_gamma_ratio = std::numeric_limits<double>::quiet_NaN();

    std::map<std::string, Flag> flags;
};

BoundReport evaluate_bounds(const ScenarioParams& params, double c_ub, double c_lb);

} // namespace hada
