#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <vector>

#include "dfw/kernels.hpp"
#include "dfw/point.hpp"

namespace dfw::transform {

using Complex = std::complex<double>;

/// Sampled function values, optionally with positive quadrature weights so
/// the discrete analysis sum can approximate the continuous transforms.
struct SampleSet {
    std::vector<Point> points;
    std::vector<double> values;
    std::vector<double> weights;  // empty means all ones

    void validate() const;
    bool operator==(const SampleSet&) const = default;
};

/// Analysis output: scales x centers matrix of complex coefficients.
/// `n_g` holds the literal-synthesis normalization once calibrated.
struct CoefficientGrid {
    std::vector<double> scales;   // lambda_j, length M
    std::vector<Point> centers;   // xi_l, length N
    Eigen::MatrixXcd coeffs;      // M x N
    std::optional<double> n_g;

    void validate() const;
};

enum class SynthesisMode { Literal, LeastSquares };

/// Discrete analysis: coeffs[j][l] = sum_k w_k f(x_k) phi(lambda_j, ||xi_l - x_k||),
/// with unit weights when absent. Linear in the sample values. Summation
/// order over k is fixed (ascending), so results are schedule-independent.
CoefficientGrid analyze(const SampleSet& samples, const std::vector<Point>& centers,
                        const std::vector<double>& scales, const kernels::KernelSpec& spec,
                        const DistanceMetric& metric);

/// Synthesis back to point values.
///
/// Literal mode computes (1/N_g) sum_j sum_l coeffs[j][l] phi(lambda_j, ||x - xi_l||)
/// verbatim; N_g must come from `n_g_override`, or from a prior
/// calibrate_ng on the grid (the formula itself leaves it unspecified).
///
/// LeastSquares mode is the canonical inverse: it solves
///   min_c ||A c - f||^2 + ridge ||c||^2,  A[k][(j,l)] = phi(lambda_j, ||x_k - xi_l||)
/// over the original samples (which must be supplied) and evaluates the
/// fitted expansion at eval_points. ridge < 0 selects the default
/// 1e-10 * ||A||_F.
std::vector<Complex> synthesize(const CoefficientGrid& grid, const kernels::KernelSpec& spec,
                                const DistanceMetric& metric,
                                const std::vector<Point>& eval_points, SynthesisMode mode,
                                double ridge = -1.0, const SampleSet* samples = nullptr,
                                std::optional<double> n_g_override = {});

/// Calibrates the literal-mode N_g so that the mean of the literal
/// reconstruction matches the mean of the samples; stores it on the grid
/// and returns it.
double calibrate_ng(CoefficientGrid& grid, const SampleSet& samples,
                    const kernels::KernelSpec& spec, const DistanceMetric& metric);

/// Fractional derivative of order m on a uniform periodic grid: transform
/// to frequency domain, multiply mode omega by
/// (i omega)^m = |omega|^m e^{i m (pi/2) sign(omega)} (principal branch,
/// so integer m reduces to the classical derivative), transform back.
/// m = 0 is the identity; negative m integrates, with the zero mode zeroed.
std::vector<double> frac_deriv_1d(const std::vector<double>& values, double step, double m);

}  // namespace dfw::transform
