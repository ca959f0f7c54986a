#pragma once

#include "hadamard/bounds.hpp"
#include "hadamard/chaining.hpp"
#include "hadamard/covering.hpp"
#include "hadamard/io.hpp"
#include "hadamard/sets.hpp"
#include "hadamard/volumes.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace hada {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    ScenarioParams params;
    std::uint64_t seed = 42;
    std::int64_t samples_volume = 200000;
    std::int64_t trials_gaussian = 0;
    int eps_grid_size = 16;
    double hull_tol = 0.0;  // 0 = derive from the eps grid (eps_min / 4)
    std::string output_path = "report.json";

    static ExperimentConfig from_json(const nlohmann::json& j);
    static ExperimentConfig from_file(const std::string& path);
    nlohmann::json to_json() const;
    void validate() const;
};

/// Geometry stages shared by the pipeline and the single-topic subcommands:
/// generator suite, union T, m sample points, hull T_h, matched eps grid.
struct ScenarioGeometry {
    ModelSpace space;
    std::vector<SetRep> suite;
    SetRep t_union;
    SetRep hull;
    std::vector<HPoint> samples;
    double diam_t = 0.0;
    double hull_tol = 0.0;
    std::vector<double> eps_grid;
    double beta_measured = 0.0;  // min boundary area over the suite
};

ScenarioGeometry build_scenario(const ExperimentConfig& config, double k, RngStream& endpoint_rng);

struct PipelineReport {
    nlohmann::json doc;

    struct EndpointArtifacts {
        double k = 0.0;
        ModelSpace space{2, 1.0};
        CoveringProfile profile_t, profile_th;
        std::vector<HPoint> sample_points;
        std::vector<HPoint> hull_points;
    };
    std::vector<EndpointArtifacts> artifacts;

    /// Deterministic payload: the document with the wall-clock diagnostics
    /// stripped. Two same-seed runs agree byte-for-byte on this form.
    nlohmann::json canonical() const;

    bool aborted() const;
    bool any_fail() const;
};

/// Full verification chain at both curvature endpoints k = k1 and k = k2.
/// Deterministic for a fixed seed. Stage failures abort into a partial
/// report tagged with the failing stage.
PipelineReport run_pipeline(const ExperimentConfig& config);

/// Named checks behind the `verify` subcommand:
/// lemma1 (hull gap), lemma2 (shell linearity), theorem1 (volume growth
/// fits), lemma4 (covering ratio), theorem2 (gamma ratio).
nlohmann::json run_verify(const std::string& check, const ExperimentConfig& config);

/// Built-in oracle suite; every entry carries name/pass/detail.
nlohmann::json run_selftest();

/// 0 when every flag in the document is pass or not-assertable, 1 otherwise.
int flags_exit_code(const nlohmann::json& doc);

} // namespace hada
