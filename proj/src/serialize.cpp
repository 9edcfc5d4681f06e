#include "dfw/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace dfw::serialize {

namespace {

const std::map<std::string, kernels::KernelFamily> kFamilyNames = {
    {"e-decay", kernels::KernelFamily::EDecay},
    {"e-osc", kernels::KernelFamily::EOsc},
    {"hf-j", kernels::KernelFamily::HFJ},
    {"winkler-fund", kernels::KernelFamily::WinklerFund},
    {"winkler-gen", kernels::KernelFamily::WinklerGen},
    {"berger-fund", kernels::KernelFamily::BergerFund},
    {"berger-gen", kernels::KernelFamily::BergerGen},
    {"convdiff-gen", kernels::KernelFamily::ConvDiffGen},
};

const std::map<std::string, approx::BasisFamily> kBasisNames = {
    {"poly-dfw", approx::BasisFamily::PolyDFW},
    {"trig-dfw", approx::BasisFamily::TrigDFW},
    {"convdiff-poly-dfw", approx::BasisFamily::ConvDiffPolyDFW},
    {"polar-dfw", approx::BasisFamily::PolarDFW},
    {"mq", approx::BasisFamily::MQ},
    {"winkler-series", approx::BasisFamily::WinklerSeries},
    {"convdiff-kernel", approx::BasisFamily::ConvDiffKernel},
};

const std::map<std::string, pdesolve::PdeOperator> kOperatorNames = {
    {"modified-helmholtz", pdesolve::PdeOperator::ModifiedHelmholtz},
    {"convection-diffusion", pdesolve::PdeOperator::ConvectionDiffusion},
    {"winkler-plate", pdesolve::PdeOperator::WinklerPlate},
};

template <typename T>
std::string name_of(const std::map<std::string, T>& table, T value, const char* what) {
    for (const auto& [name, v] : table)
        if (v == value) return name;
    throw SerializationError(std::string("unknown ") + what + " enum value");
}

template <typename T>
T value_of(const std::map<std::string, T>& table, const std::string& name, const char* what) {
    auto it = table.find(name);
    if (it == table.end())
        throw SerializationError(std::string("unknown ") + what + " name: '" + name + "'");
    return it->second;
}

template <typename T>
T get_field(const json& j, const char* key) {
    if (!j.contains(key))
        throw SerializationError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw SerializationError(std::string("bad field '") + key + "': " + e.what());
    }
}

template <typename T>
T get_field_or(const json& j, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    return get_field<T>(j, key);
}

json points_to_json(const std::vector<Point>& pts) {
    json arr = json::array();
    for (const auto& p : pts) arr.push_back(p);
    return arr;
}

std::vector<Point> points_from_json(const json& j, const char* key) {
    auto raw = get_field<std::vector<std::vector<double>>>(j, key);
    std::vector<Point> out;
    out.reserve(raw.size());
    for (auto& p : raw) out.push_back(std::move(p));
    return out;
}

}  // namespace

json to_json(const DistanceMetric& m) {
    json j;
    if (m.mode == DistanceMetric::Mode::Isotropic) {
        j["mode"] = "isotropic";
    } else {
        j["mode"] = "anisotropic";
        j["weights"] = m.weights;
    }
    return j;
}

DistanceMetric metric_from_json(const json& j) {
    const auto mode = get_field<std::string>(j, "mode");
    if (mode == "isotropic") return DistanceMetric::isotropic();
    if (mode == "anisotropic")
        return DistanceMetric::anisotropic(get_field<std::vector<double>>(j, "weights"));
    throw SerializationError("metric mode must be 'isotropic' or 'anisotropic'");
}

json to_json(const kernels::KernelSpec& s) {
    json j;
    j["family"] = name_of(kFamilyNames, s.family, "kernel family");
    j["n"] = s.n;
    j["scale"] = s.scale;
    j["norm"] = s.norm;
    if (s.drift) {
        j["drift"] = {{"v", s.drift->v}, {"D", s.drift->D}};
    }
    return j;
}

kernels::KernelSpec kernel_spec_from_json(const json& j) {
    kernels::KernelSpec s;
    s.family = value_of(kFamilyNames, get_field<std::string>(j, "family"), "kernel family");
    s.n = get_field<double>(j, "n");
    s.scale = get_field<double>(j, "scale");
    s.norm = get_field_or<double>(j, "norm", 1.0);
    if (j.contains("drift")) {
        const json& d = j.at("drift");
        s.drift = kernels::Drift{get_field<std::vector<double>>(d, "v"), get_field<double>(d, "D")};
    }
    return s;
}

json to_json(const approx::BasisSpec& b) {
    json j;
    j["family"] = name_of(kBasisNames, b.family, "basis family");
    j["centers"] = points_to_json(b.centers);
    j["nx"] = b.nx;
    j["ny"] = b.ny;
    j["degree"] = b.degree;
    j["v"] = b.v;
    j["diffusivity"] = b.diffusivity;
    j["use_general_solution"] = b.use_general_solution;
    j["tau"] = b.tau;
    j["n"] = b.n;
    j["shapes"] = b.shapes;
    j["scales"] = b.scales;
    return j;
}

approx::BasisSpec basis_spec_from_json(const json& j) {
    approx::BasisSpec b;
    b.family = value_of(kBasisNames, get_field<std::string>(j, "family"), "basis family");
    b.centers = points_from_json(j, "centers");
    b.nx = get_field_or<int>(j, "nx", 0);
    b.ny = get_field_or<int>(j, "ny", 0);
    b.degree = get_field_or<int>(j, "degree", 0);
    b.v = get_field_or<std::vector<double>>(j, "v", {});
    b.diffusivity = get_field_or<double>(j, "diffusivity", 1.0);
    b.use_general_solution = get_field_or<bool>(j, "use_general_solution", false);
    b.tau = get_field_or<double>(j, "tau", 1.0);
    b.n = get_field_or<double>(j, "n", 2.0);
    b.shapes = get_field_or<std::vector<double>>(j, "shapes", {});
    b.scales = get_field_or<std::vector<double>>(j, "scales", {});
    return b;
}

json to_json(const approx::SeriesModel& m) {
    json j;
    j["basis"] = to_json(m.basis);
    j["coeffs"] = std::vector<double>(m.coeffs.data(), m.coeffs.data() + m.coeffs.size());
    j["diagnostics"] = {{"rank", m.diagnostics.rank},
                        {"residual_norm", m.diagnostics.residual_norm},
                        {"rank_tol", m.diagnostics.rank_tol}};
    return j;
}

approx::SeriesModel series_model_from_json(const json& j) {
    approx::SeriesModel m;
    if (!j.contains("basis")) throw SerializationError("missing field 'basis'");
    m.basis = basis_spec_from_json(j.at("basis"));
    auto coeffs = get_field<std::vector<double>>(j, "coeffs");
    m.coeffs = Eigen::Map<const Eigen::VectorXd>(coeffs.data(),
                                                 static_cast<Eigen::Index>(coeffs.size()));
    if (j.contains("diagnostics")) {
        const json& d = j.at("diagnostics");
        m.diagnostics.rank = get_field_or<long>(d, "rank", 0);
        m.diagnostics.residual_norm = get_field_or<double>(d, "residual_norm", 0.0);
        m.diagnostics.rank_tol = get_field_or<double>(d, "rank_tol", 0.0);
    }
    return m;
}

json to_json(const pdesolve::PdeSpec& s) {
    json j;
    j["operator"] = name_of(kOperatorNames, s.op, "pde operator");
    j["n"] = s.n;
    j["tau"] = s.tau;
    j["v"] = s.v;
    j["D"] = s.D;
    j["k"] = s.k;
    j["kappa"] = s.kappa;
    return j;
}

pdesolve::PdeSpec pde_spec_from_json(const json& j) {
    pdesolve::PdeSpec s;
    s.op = value_of(kOperatorNames, get_field<std::string>(j, "operator"), "pde operator");
    s.n = get_field_or<double>(j, "n", 2.0);
    s.tau = get_field_or<double>(j, "tau", 1.0);
    s.v = get_field_or<std::vector<double>>(j, "v", {});
    s.D = get_field_or<double>(j, "D", 1.0);
    s.k = get_field_or<double>(j, "k", 0.0);
    s.kappa = get_field_or<double>(j, "kappa", 1.0);
    return s;
}

json to_json(const transform::SampleSet& s) {
    json j;
    j["points"] = points_to_json(s.points);
    j["values"] = s.values;
    j["weights"] = s.weights;
    return j;
}

transform::SampleSet sample_set_from_json(const json& j) {
    transform::SampleSet s;
    s.points = points_from_json(j, "points");
    s.values = get_field<std::vector<double>>(j, "values");
    s.weights = get_field_or<std::vector<double>>(j, "weights", {});
    return s;
}

json to_json(const pdesolve::BoundaryProblem& p) {
    json j;
    j["boundary_points"] = points_to_json(p.boundary_points);
    j["boundary_values"] = p.boundary_values;
    j["boundary_laplacians"] = p.boundary_laplacians;
    j["interior_probe_points"] = points_to_json(p.interior_probe_points);
    return j;
}

pdesolve::BoundaryProblem boundary_problem_from_json(const json& j) {
    pdesolve::BoundaryProblem p;
    p.boundary_points = points_from_json(j, "boundary_points");
    p.boundary_values = get_field<std::vector<double>>(j, "boundary_values");
    p.boundary_laplacians = get_field_or<std::vector<double>>(j, "boundary_laplacians", {});
    if (j.contains("interior_probe_points"))
        p.interior_probe_points = points_from_json(j, "interior_probe_points");
    return p;
}

json make_document(json payload) {
    payload["dfw-schema"] = kSchemaVersion;
    return payload;
}

json load_document(const json& j) {
    if (!j.contains("dfw-schema"))
        throw SerializationError("missing 'dfw-schema' version field");
    if (j.at("dfw-schema") != kSchemaVersion)
        throw SerializationError("unsupported 'dfw-schema' version");
    json out = j;
    out.erase("dfw-schema");
    return out;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out << ',';
        out << header[i];
    }
    out << '\n';
    for (const auto& row : rows) {
        if (row.size() != header.size())
            throw SerializationError("csv row width does not match header");
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << row[i];
        }
        out << '\n';
    }
    return out.str();
}

std::string coefficient_grid_csv(const transform::CoefficientGrid& grid) {
    grid.validate();
    const std::size_t dim = grid.centers.front().size();
    std::vector<std::string> header = {"scale"};
    for (std::size_t d = 0; d < dim; ++d) header.push_back("center_" + std::to_string(d));
    header.push_back("coeff_re");
    header.push_back("coeff_im");

    std::vector<std::vector<std::string>> rows;
    for (std::size_t j = 0; j < grid.scales.size(); ++j)
        for (std::size_t l = 0; l < grid.centers.size(); ++l) {
            std::vector<std::string> row = {format_double(grid.scales[j])};
            for (double c : grid.centers[l]) row.push_back(format_double(c));
            const auto v = grid.coeffs(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(l));
            row.push_back(format_double(v.real()));
            row.push_back(format_double(v.imag()));
            rows.push_back(std::move(row));
        }
    return to_csv(header, rows);
}

json coefficient_grid_meta(const transform::CoefficientGrid& grid) {
    json j;
    j["scales"] = grid.scales;
    j["centers"] = points_to_json(grid.centers);
    j["rows"] = grid.scales.size() * grid.centers.size();
    if (grid.n_g) j["n_g"] = *grid.n_g;
    return make_document(std::move(j));
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << contents;
    if (!out) throw IoError("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace dfw::serialize
