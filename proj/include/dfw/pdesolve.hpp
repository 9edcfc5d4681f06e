#pragma once

#include <functional>
#include <vector>

#include "dfw/approx.hpp"
#include "dfw/point.hpp"

namespace dfw::pdesolve {

enum class PdeOperator { ModifiedHelmholtz, ConvectionDiffusion, WinklerPlate };

struct PdeSpec {
    PdeOperator op = PdeOperator::ModifiedHelmholtz;
    double n = 2.0;               // space dimensionality
    double tau = 1.0;             // ModifiedHelmholtz
    std::vector<double> v;        // ConvectionDiffusion drift
    double D = 1.0;               // diffusivity
    double k = 0.0;               // reaction coefficient, >= 0
    double kappa = 1.0;           // foundation stiffness (WinklerPlate)

    void validate() const;
    /// The modified-Helmholtz parameter the convection-diffusion problem
    /// reduces to: sqrt((|v| / 2D)^2 + k / D). For ModifiedHelmholtz returns
    /// tau itself.
    double effective_tau() const;
    bool operator==(const PdeSpec&) const = default;
};

struct BoundaryProblem {
    std::vector<Point> boundary_points;
    std::vector<double> boundary_values;          // Dirichlet data
    std::vector<double> boundary_laplacians;      // second condition (plate only)
    std::vector<Point> interior_probe_points;

    void validate(bool needs_laplacians = false) const;
    bool operator==(const BoundaryProblem&) const = default;
};

/// Boundary-knot collocation for grad^2 u = tau^2 u with Dirichlet data.
/// Centers are the boundary points themselves; columns are the nonsingular
/// general-solution kernel, so no fictitious boundary is needed. The
/// reported residual_norm is the boundary collocation residual.
approx::SeriesModel solve_modified_helmholtz(const BoundaryProblem& problem, double tau, double n,
                                             double rank_tol = approx::kDefaultRankTol);

/// Steady convection-diffusion D grad^2 u + v . grad u - k u = 0 with
/// Dirichlet data, expanded directly in drift-weighted nonsingular kernels
/// with tau from effective_tau(). With v = 0 the code path and the result
/// match solve_modified_helmholtz bit for bit.
approx::SeriesModel solve_convdiff(const BoundaryProblem& problem, const std::vector<double>& v,
                                   double D, double k, double n,
                                   double rank_tol = approx::kDefaultRankTol);

/// Plate on an elastic foundation, grad^4 u + kappa^2 u = 0, collocating
/// both u and grad^2 u at each boundary point. The returned model uses the
/// Kelvin series basis; its leading biharmonic-monomial columns are not
/// solutions of this operator, so their coefficients stay at zero and only
/// the ber/bei columns about the boundary knots are collocated.
approx::SeriesModel solve_winkler_plate(const BoundaryProblem& problem, double kappa, double n,
                                        double rank_tol = approx::kDefaultRankTol);

/// |operator applied to a scalar field| at a point, by central finite
/// differences (5-point Laplacian per axis pair; the fourth-order operator
/// nests two Laplacians). Deliberately ignorant of how the field was built.
double pde_residual_field(const std::function<double(const Point&)>& field, const PdeSpec& spec,
                          const Point& x, double h);

double pde_residual(const approx::SeriesModel& model, const PdeSpec& spec, const Point& x,
                    double h = 1e-4);

/// Largest pairwise distance; solvers and the CLI use 1e-4 times this as
/// the default residual stencil width.
double domain_diameter(const std::vector<Point>& points);

}  // namespace dfw::pdesolve
