#pragma once

#include "hadamard/chaining.hpp"
#include "hadamard/covering.hpp"
#include "hadamard/sets.hpp"
#include "hadamard/volumes.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hada {

/// Support cloud as CSV: a `# kind=... n=... k=...` header line, then one
/// point per row (n+1 Minkowski coordinates).
void save_cloud_csv(const std::string& path, const ModelSpace& space, SetKind kind,
                    const std::vector<HPoint>& pts);

void save_covering_csv(const std::string& path, const CoveringProfile& profile);

/// Distance matrix from CSV rows (numbers separated by commas).
Eigen::MatrixXd load_matrix_csv(const std::string& path);

/// Vector rows from CSV.
std::vector<Eigen::VectorXd> load_vectors_csv(const std::string& path);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

nlohmann::json to_json(const VolumeEstimate& v, SetKind kind, const ModelSpace& space);
nlohmann::json to_json(const Flag& f);
nlohmann::json to_json(const CoveringProfile& p);
nlohmann::json to_json(const ScenarioParams& p);
nlohmann::json to_json(const BoundReport& r);

} // namespace hada
