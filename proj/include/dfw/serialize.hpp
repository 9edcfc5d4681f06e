#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "dfw/approx.hpp"
#include "dfw/kernels.hpp"
#include "dfw/pdesolve.hpp"
#include "dfw/point.hpp"
#include "dfw/transform.hpp"

// JSON round-tripping for every persistent type, plus CSV helpers. Every
// emitted JSON document carries "dfw-schema": 1; loaders reject other
// versions. Parse problems surface as dfw::SerializationError with the
// offending field named.

namespace dfw {

struct SerializationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File-level failures (open/read/write), as opposed to malformed content.
struct IoError : SerializationError {
    using SerializationError::SerializationError;
};

namespace serialize {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json to_json(const DistanceMetric& m);
json to_json(const kernels::KernelSpec& s);
json to_json(const approx::BasisSpec& b);
json to_json(const approx::SeriesModel& m);
json to_json(const pdesolve::PdeSpec& s);
json to_json(const transform::SampleSet& s);
json to_json(const pdesolve::BoundaryProblem& p);

DistanceMetric metric_from_json(const json& j);
kernels::KernelSpec kernel_spec_from_json(const json& j);
approx::BasisSpec basis_spec_from_json(const json& j);
approx::SeriesModel series_model_from_json(const json& j);
pdesolve::PdeSpec pde_spec_from_json(const json& j);
transform::SampleSet sample_set_from_json(const json& j);
pdesolve::BoundaryProblem boundary_problem_from_json(const json& j);

/// Wraps a payload with the schema version; load_document checks and strips it.
json make_document(json payload);
json load_document(const json& j);

/// Full-precision ("%.17g") decimal formatting — round-trips any double.
std::string format_double(double v);

/// One CSV cell per string; writer adds header + newline-terminated rows.
std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows);

/// CoefficientGrid as CSV (scale, center coords, coeff re/im) + metadata JSON.
std::string coefficient_grid_csv(const transform::CoefficientGrid& grid);
json coefficient_grid_meta(const transform::CoefficientGrid& grid);

void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

}  // namespace serialize
}  // namespace dfw
