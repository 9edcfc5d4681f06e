// File-based batch driver: every mathematical parameter lives in the JSON
// config; flags only point at files and toggle logging. Outputs are
// deterministic — the same config and inputs always produce the same bytes.
//
// Exit codes: 0 success, 1 usage/config error, 2 numerical failure,
// 3 I/O error.

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>

#include "dfw/approx.hpp"
#include "dfw/errors.hpp"
#include "dfw/kernels.hpp"
#include "dfw/pdesolve.hpp"
#include "dfw/serialize.hpp"
#include "dfw/transform.hpp"

namespace fs = std::filesystem;
using dfw::serialize::format_double;
using dfw::serialize::json;

namespace {

struct Options {
    std::string config_path;
    std::string output_dir = ".";
    long seed = 0;
    bool verbose = false;
};

void log_verbose(const Options& opt, const std::string& msg) {
    if (opt.verbose) std::cerr << "[dfw] " << msg << "\n";
}

void write_output(const Options& opt, const std::string& name, const std::string& contents) {
    fs::create_directories(opt.output_dir);
    dfw::serialize::write_file((fs::path(opt.output_dir) / name).string(), contents);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::vector<double> grid_values(const json& cfg, const char* list_key, const char* grid_key) {
    if (cfg.contains(list_key)) return cfg.at(list_key).get<std::vector<double>>();
    if (!cfg.contains(grid_key))
        throw dfw::SerializationError(std::string("need '") + list_key + "' or '" + grid_key + "'");
    const json& g = cfg.at(grid_key);
    const double lo = g.at("min").get<double>();
    const double hi = g.at("max").get<double>();
    const int count = g.at("count").get<int>();
    if (count < 1) throw dfw::SerializationError(std::string(grid_key) + ": count must be >= 1");
    std::vector<double> out(count);
    for (int i = 0; i < count; ++i)
        out[i] = count == 1 ? lo : lo + (hi - lo) * double(i) / double(count - 1);
    return out;
}

std::vector<dfw::Point> points_field(const json& cfg, const char* key) {
    auto raw = cfg.at(key).get<std::vector<std::vector<double>>>();
    std::vector<dfw::Point> out;
    out.reserve(raw.size());
    for (auto& p : raw) out.push_back(std::move(p));
    return out;
}

dfw::DistanceMetric metric_field(const json& cfg) {
    if (!cfg.contains("metric")) return dfw::DistanceMetric::isotropic();
    return dfw::serialize::metric_from_json(cfg.at("metric"));
}

void run_kernel_table(const Options& opt, const json& cfg) {
    const auto spec = dfw::serialize::kernel_spec_from_json(cfg.at("kernel"));
    const auto radii = grid_values(cfg, "r_values", "r_grid");
    const auto scales = grid_values(cfg, "scales", "scale_grid");

    std::vector<std::vector<std::string>> rows;
    for (double scale : scales)
        for (double r : radii) {
            const auto v = dfw::kernels::kernel_value_radial(spec, scale, r);
            rows.push_back({format_double(r), format_double(scale), format_double(v.real()),
                            format_double(v.imag())});
        }
    write_output(opt, "kernel_table.csv",
                 dfw::serialize::to_csv({"r", "scale", "value_re", "value_im"}, rows));
    log_verbose(opt, "kernel table: " + std::to_string(rows.size()) + " rows");
}

void run_transform(const Options& opt, const json& cfg) {
    const auto samples = dfw::serialize::sample_set_from_json(cfg.at("samples"));
    const auto spec = dfw::serialize::kernel_spec_from_json(cfg.at("kernel"));
    const auto metric = metric_field(cfg);
    const auto centers = points_field(cfg, "centers");
    const auto scales = cfg.at("scales").get<std::vector<double>>();

    auto grid = dfw::transform::analyze(samples, centers, scales, spec, metric);
    if (cfg.value("calibrate_ng", false))
        dfw::transform::calibrate_ng(grid, samples, spec, metric);

    write_output(opt, "coefficients.csv", dfw::serialize::coefficient_grid_csv(grid));
    write_output(opt, "coefficients_meta.json",
                 dump(dfw::serialize::coefficient_grid_meta(grid)));
    log_verbose(opt, "transform: " + std::to_string(scales.size()) + " scales x " +
                         std::to_string(centers.size()) + " centers");
}

json residual_report(const dfw::approx::SeriesModel& model,
                     const dfw::transform::SampleSet& samples) {
    double max_abs = 0.0, sum_sq = 0.0;
    for (std::size_t i = 0; i < samples.points.size(); ++i) {
        const double r = dfw::approx::eval_series(model, samples.points[i]) - samples.values[i];
        max_abs = std::max(max_abs, std::abs(r));
        sum_sq += r * r;
    }
    json j;
    j["max_abs_residual"] = max_abs;
    j["rms_residual"] = std::sqrt(sum_sq / double(samples.points.size()));
    j["rank"] = model.diagnostics.rank;
    j["residual_norm"] = model.diagnostics.residual_norm;
    j["rank_tol"] = model.diagnostics.rank_tol;
    return j;
}

void run_fit(const Options& opt, const json& cfg) {
    const auto basis = dfw::serialize::basis_spec_from_json(cfg.at("basis"));
    const auto samples = dfw::serialize::sample_set_from_json(cfg.at("samples"));
    const double rank_tol = cfg.value("rank_tol", dfw::approx::kDefaultRankTol);

    const auto model = dfw::approx::fit_series(basis, samples, rank_tol);
    write_output(opt, "model.json",
                 dump(dfw::serialize::make_document(dfw::serialize::to_json(model))));
    write_output(opt, "residual_report.json",
                 dump(dfw::serialize::make_document(residual_report(model, samples))));
    log_verbose(opt, "fit: rank " + std::to_string(model.diagnostics.rank));
}

void run_solve(const Options& opt, const json& cfg) {
    const auto spec = dfw::serialize::pde_spec_from_json(cfg.at("pde"));
    const auto problem = dfw::serialize::boundary_problem_from_json(cfg.at("problem"));
    const double rank_tol = cfg.value("rank_tol", dfw::approx::kDefaultRankTol);

    dfw::approx::SeriesModel model;
    switch (spec.op) {
        case dfw::pdesolve::PdeOperator::ModifiedHelmholtz:
            model = dfw::pdesolve::solve_modified_helmholtz(problem, spec.tau, spec.n, rank_tol);
            break;
        case dfw::pdesolve::PdeOperator::ConvectionDiffusion:
            model = dfw::pdesolve::solve_convdiff(problem, spec.v, spec.D, spec.k, spec.n,
                                                  rank_tol);
            break;
        case dfw::pdesolve::PdeOperator::WinklerPlate:
            model = dfw::pdesolve::solve_winkler_plate(problem, spec.kappa, spec.n, rank_tol);
            break;
    }

    json report;
    report["boundary_residual_norm"] = model.diagnostics.residual_norm;
    report["rank"] = model.diagnostics.rank;
    if (!problem.interior_probe_points.empty()) {
        const double h = cfg.value(
            "stencil_h", 1e-4 * dfw::pdesolve::domain_diameter(problem.boundary_points));
        json probes = json::array();
        double max_res = 0.0;
        for (const auto& p : problem.interior_probe_points) {
            const double r = dfw::pdesolve::pde_residual(model, spec, p, h);
            max_res = std::max(max_res, r);
            json entry;
            entry["point"] = p;
            entry["residual"] = r;
            probes.push_back(entry);
        }
        report["stencil_h"] = h;
        report["interior_probes"] = probes;
        report["max_interior_residual"] = max_res;
    }

    write_output(opt, "model.json",
                 dump(dfw::serialize::make_document(dfw::serialize::to_json(model))));
    write_output(opt, "residual_report.json",
                 dump(dfw::serialize::make_document(std::move(report))));
    log_verbose(opt, "solve: rank " + std::to_string(model.diagnostics.rank));
}

void run_residual_check(const Options& opt, const json& cfg) {
    // relative model paths resolve against the config file's directory
    fs::path model_path = cfg.at("model_path").get<std::string>();
    if (model_path.is_relative())
        model_path = fs::path(opt.config_path).parent_path() / model_path;
    const json model_doc = dfw::serialize::load_document(
        json::parse(dfw::serialize::read_file(model_path.string())));
    const auto model = dfw::serialize::series_model_from_json(model_doc);
    const auto spec = dfw::serialize::pde_spec_from_json(cfg.at("pde"));
    const auto probes = points_field(cfg, "probe_points");
    const double h = cfg.value("stencil_h", 1e-4 * dfw::pdesolve::domain_diameter(probes));

    std::vector<std::vector<std::string>> rows;
    const std::size_t dim = probes.empty() ? 0 : probes.front().size();
    std::vector<std::string> header;
    for (std::size_t d = 0; d < dim; ++d) header.push_back("x_" + std::to_string(d));
    header.push_back("residual");
    for (const auto& p : probes) {
        std::vector<std::string> row;
        for (double c : p) row.push_back(format_double(c));
        row.push_back(format_double(dfw::pdesolve::pde_residual(model, spec, p, h)));
        rows.push_back(std::move(row));
    }
    write_output(opt, "residuals.csv", dfw::serialize::to_csv(header, rows));
    log_verbose(opt, "residual-check: " + std::to_string(rows.size()) + " probes");
}

int run(const Options& opt) {
    json cfg;
    try {
        cfg = json::parse(dfw::serialize::read_file(opt.config_path));
    } catch (const dfw::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const json::exception& e) {
        std::cerr << "error: config parse failure: " << e.what() << "\n";
        return 1;
    }

    try {
        cfg = dfw::serialize::load_document(cfg);
        const auto command = cfg.at("command").get<std::string>();
        log_verbose(opt, "command: " + command + " (seed " + std::to_string(opt.seed) + ")");
        if (command == "kernel-table")
            run_kernel_table(opt, cfg);
        else if (command == "transform")
            run_transform(opt, cfg);
        else if (command == "fit")
            run_fit(opt, cfg);
        else if (command == "solve")
            run_solve(opt, cfg);
        else if (command == "residual-check")
            run_residual_check(opt, cfg);
        else {
            std::cerr << "error: unknown command '" << command << "'\n";
            return 1;
        }
    } catch (const dfw::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const dfw::SerializationError& e) {
        std::cerr << "error: config: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "error: config: " << e.what() << "\n";
        return 1;
    } catch (const dfw::DomainError& e) {
        std::cerr << "error: numerical: " << e.what() << "\n";
        return 2;
    } catch (const dfw::OverflowError& e) {
        std::cerr << "error: numerical: " << e.what() << "\n";
        return 2;
    } catch (const dfw::NumericalError& e) {
        std::cerr << "error: numerical: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"distance-function-wavelet toolkit"};
    app.add_option("--config", opt.config_path, "path to the JSON run configuration")->required();
    app.add_option("--output", opt.output_dir, "directory for output files");
    app.add_option("--seed", opt.seed, "seed for any randomized sampling (default 0)");
    app.add_flag("--verbose", opt.verbose, "log progress to stderr");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage errors map onto exit code 1
    }
    return run(opt);
}
