#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "dfw/point.hpp"
#include "dfw/transform.hpp"

namespace dfw::approx {

enum class BasisFamily {
    PolyDFW,           // translated monomials (x-x_k)^i (y-y_k)^j
    TrigDFW,           // sin(2 pi i (x-x_k)) cos(2 pi j (y-y_k))
    ConvDiffPolyDFW,   // drift-weighted translated monomials
    PolarDFW,          // r_k^j {sin,cos}(j * angle between position vectors)
    MQ,                // multiquadric sqrt(r_k^2 + s_k^2)
    WinklerSeries,     // cubic monomials + scaled Kelvin ber/bei columns
    ConvDiffKernel,    // one nonsingular general-solution column per center
};

/// A basis is a list of centers plus family-specific bounds/parameters.
/// Only the fields the family uses are read; validate() checks the rest.
struct BasisSpec {
    BasisFamily family = BasisFamily::PolyDFW;
    std::vector<Point> centers;

    int nx = 0, ny = 0;            // degree bounds (Poly/Trig/ConvDiffPoly)
    int degree = 0;                // angular bound N (PolarDFW)
    std::vector<double> v;         // drift velocity (ConvDiffPoly/ConvDiffKernel)
    double diffusivity = 1.0;      // D
    bool use_general_solution = false;  // ConvDiffPoly variant: weight by kernel
    double tau = 1.0;              // kernel parameter (general-solution variant, ConvDiffKernel)
    double n = 2.0;                // space dimensionality for kernel-backed columns
    std::vector<double> shapes;    // MQ shape parameters s_k (per center)
    std::vector<double> scales;    // WinklerSeries stiffness values kappa_j

    void validate() const;
    std::size_t column_count() const;
    bool operator==(const BasisSpec&) const = default;
};

struct FitDiagnostics {
    long rank = 0;
    double residual_norm = 0.0;
    double rank_tol = 0.0;
    bool operator==(const FitDiagnostics&) const = default;
};

struct SeriesModel {
    BasisSpec basis;
    Eigen::VectorXd coeffs;
    FitDiagnostics diagnostics;
};

/// Rows = points, columns = basis functions in the canonical order below.
///
///   PolyDFW / ConvDiffPolyDFW (plain): one global constant column, then
///     centers in order, each contributing (i,j) lexicographic with
///     i=0..nx, j=0..ny, skipping (0,0). ConvDiffPoly multiplies the
///     non-constant columns by exp(-(v . (x - x_k)) / 2D).
///   ConvDiffPolyDFW with use_general_solution: no global constant; per
///     center all (i,j) including (0,0), each weighted by the nonsingular
///     convection-diffusion kernel value at that center.
///   TrigDFW: per center all (i,j) lexicographic including (0,0); i = 0
///     columns vanish identically (sin factor) and are kept so the
///     enumeration stays a plain double loop — rank truncation absorbs them.
///   PolarDFW: global constant, then centers in order, each contributing
///     j = 1..degree pairs [r_k^j sin(j dtheta), r_k^j cos(j dtheta)] where
///     dtheta = atan2(cross(c, p), dot(c, p)) between the position vectors.
///   MQ: one column per center, sqrt(|x - x_k|^2 + s_k^2).
///   WinklerSeries: all 2-D monomials of total degree <= 3 (the biharmonic
///     part), then scale-major / center-minor pairs of
///     (r sqrt(k_j))^{1-n/2} {ber, bei}_{n/2-1}(r sqrt(k_j)).
///   ConvDiffKernel: one nonsingular general-solution column per center.
Eigen::MatrixXd build_design_matrix(const BasisSpec& basis, const std::vector<Point>& points);

/// Minimum-norm least squares with singular values below rank_tol * sigma_max
/// truncated. Returns (coeffs, numerical rank, residual 2-norm).
std::tuple<Eigen::VectorXd, long, double> lstsq_minnorm(const Eigen::MatrixXd& A,
                                                        const Eigen::VectorXd& b, double rank_tol);

inline constexpr double kDefaultRankTol = 1e-10;

SeriesModel fit_series(const BasisSpec& basis, const transform::SampleSet& samples,
                       double rank_tol = kDefaultRankTol);

double eval_series(const SeriesModel& model, const Point& x);

/// Drops coefficients with |c| < threshold * max|c| (in place) and returns
/// the number dropped; callers can re-measure residuals afterwards.
std::size_t threshold_coefficients(SeriesModel& model, double threshold);

/// Exponent pairs (i, j) of all 2-D monomials with total degree <= max_total,
/// in the fixed enumeration order used by WinklerSeries columns.
std::vector<std::pair<int, int>> monomials_up_to_total_degree(int max_total);

}  // namespace dfw::approx
