#include "hadamard/io.hpp"

#include <fstream>
#include <sstream>

namespace hada {

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void save_cloud_csv(const std::string& path, const ModelSpace& space, SetKind kind,
                    const std::vector<HPoint>& pts) {
    std::ostringstream out;
    out.precision(17);
    out << "# kind=" << to_string(kind) << " n=" << space.dim << " k=" << space.k << "\n";
    for (const auto& p : pts) {
        for (Eigen::Index i = 0; i < p.x.size(); ++i) {
            if (i) out << ',';
            out << p.x[i];
        }
        out << '\n';
    }
    write_text_file(path, out.str());
}

void save_covering_csv(const std::string& path, const CoveringProfile& profile) {
    std::ostringstream out;
    out.precision(17);
    out << "eps,count,method\n";
    for (std::size_t i = 0; i < profile.epsilons.size(); ++i)
        out << profile.epsilons[i] << ',' << profile.counts[i] << ',' << profile.method << '\n';
    write_text_file(path, out.str());
}

namespace {

std::vector<std::vector<double>> load_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            if (cell.empty()) continue;
            row.push_back(std::stod(cell));
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

Eigen::MatrixXd load_matrix_csv(const std::string& path) {
    const auto rows = load_rows(path);
    if (rows.empty()) throw std::runtime_error("empty matrix file: " + path);
    Eigen::MatrixXd m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.front().size())
            throw std::runtime_error("ragged matrix file: " + path);
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Eigen::VectorXd> load_vectors_csv(const std::string& path) {
    const auto rows = load_rows(path);
    std::vector<Eigen::VectorXd> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        Eigen::VectorXd v(r.size());
        for (std::size_t j = 0; j < r.size(); ++j) v[j] = r[j];
        out.push_back(std::move(v));
    }
    return out;
}

nlohmann::json to_json(const VolumeEstimate& v, SetKind kind, const ModelSpace& space) {
    return {{"kind", to_string(kind)}, {"n", space.dim},           {"k", space.k},
            {"samples", v.samples},    {"value", v.value},         {"stderr", v.stderr_},
            {"bounding_volume", v.bounding_volume},                {"low_confidence", v.low_confidence}};
}

nlohmann::json to_json(const Flag& f) { return f.str(); }

nlohmann::json to_json(const CoveringProfile& p) {
    return {{"eps", p.epsilons}, {"counts", p.counts}, {"method", p.method}};
}

nlohmann::json to_json(const ScenarioParams& p) {
    return {{"n", p.n},     {"k1", p.k1},         {"k2", p.k2},     {"m", p.m},
            {"rho", p.rho}, {"lambda", p.lambda}, {"beta", p.beta}, {"alpha", p.alpha}};
}

nlohmann::json to_json(const BoundReport& r) {
    nlohmann::json flags = nlohmann::json::object();
    for (const auto& [name, flag] : r.flags) flags[name] = flag.str();
    auto opt = [](double x) {
        return std::isnan(x) ? nlohmann::json(nullptr) : nlohmann::json(x);
    };
    return {{"params", to_json(r.params)},
            {"a", r.a},
            {"eta_star", r.eta},
            {"varpi", r.varpi_value},
            {"c_ub", r.c_ub},
            {"c_lb", r.c_lb},
            {"vol_th_upper_shape", r.vol_upper_shape},
            {"vol_t_lower_shape", r.vol_lower_shape},
            {"r_hada", r.r_hada},
            {"r_clamped", r.r_clamped},
            {"l_hada", r.l_hada},
            {"measured",
             {{"vol_t", opt(r.measured_vol_t)},
              {"vol_th", opt(r.measured_vol_th)},
              {"beta", opt(r.measured_beta)},
              {"cover_ratio", opt(r.measured_cover_ratio)},
              {"gamma_ratio", opt(r.measured_gamma_ratio)}}},
            {"flags", flags}};
}

} // namespace hada
