#include "dfw/pdesolve.hpp"

#include <cmath>

#include "dfw/errors.hpp"
#include "dfw/kernels.hpp"
#include "dfw/specfun.hpp"

namespace dfw::pdesolve {

namespace {

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

void require_distinct(const std::vector<Point>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            double d = 0.0;
            for (std::size_t k = 0; k < pts[i].size(); ++k)
                d += (pts[i][k] - pts[j][k]) * (pts[i][k] - pts[j][k]);
            if (d == 0.0) throw DomainError("boundary points must be pairwise distinct");
        }
}

// Shared collocation path: both second-order solvers build the same kernel
// basis, so the v = 0 convection-diffusion solve is bitwise identical to the
// modified-Helmholtz one.
approx::SeriesModel solve_kernel_collocation(const BoundaryProblem& problem,
                                             const std::vector<double>& v, double D, double tau,
                                             double n, double rank_tol) {
    problem.validate();
    require_distinct(problem.boundary_points);

    approx::BasisSpec basis;
    basis.family = approx::BasisFamily::ConvDiffKernel;
    basis.centers = problem.boundary_points;
    basis.v = v;
    basis.diffusivity = D;
    basis.tau = tau;
    basis.n = n;

    transform::SampleSet samples;
    samples.points = problem.boundary_points;
    samples.values = problem.boundary_values;
    return approx::fit_series(basis, samples, rank_tol);
}

}  // namespace

void PdeSpec::validate() const {
    if (!(n >= 2.0)) throw DomainError("PdeSpec: n must be >= 2");
    switch (op) {
        case PdeOperator::ModifiedHelmholtz:
            if (!(tau > 0.0)) throw DomainError("PdeSpec: tau must be > 0");
            break;
        case PdeOperator::ConvectionDiffusion: {
            if (!(D > 0.0)) throw DomainError("PdeSpec: D must be > 0");
            if (!(k >= 0.0)) throw DomainError("PdeSpec: k must be >= 0");
            const double half = norm2(v) / (2.0 * D);
            if (!(half * half + k / D > 0.0))
                throw DomainError("PdeSpec: (|v|/2D)^2 + k/D must be positive");
            break;
        }
        case PdeOperator::WinklerPlate:
            if (!(kappa > 0.0)) throw DomainError("PdeSpec: kappa must be > 0");
            if (!(n <= 5.0)) throw DomainError("PdeSpec: WinklerPlate requires n <= 5");
            break;
    }
}

double PdeSpec::effective_tau() const {
    if (op == PdeOperator::ModifiedHelmholtz) return tau;
    if (op == PdeOperator::ConvectionDiffusion) {
        const double half = norm2(v) / (2.0 * D);
        return std::sqrt(half * half + k / D);
    }
    throw DomainError("effective_tau: not defined for fourth-order operators");
}

void BoundaryProblem::validate(bool needs_laplacians) const {
    if (boundary_points.empty()) throw DomainError("BoundaryProblem: no boundary points");
    if (boundary_values.size() != boundary_points.size())
        throw NumericalError("BoundaryProblem: values/points size mismatch");
    if (needs_laplacians && boundary_laplacians.size() != boundary_points.size())
        throw NumericalError("BoundaryProblem: plate problems need one Laplacian value per point");
    const std::size_t dim = boundary_points.front().size();
    for (const auto& p : boundary_points)
        if (p.size() != dim) throw NumericalError("BoundaryProblem: inconsistent dimensions");
    for (const auto& p : interior_probe_points)
        if (p.size() != dim) throw NumericalError("BoundaryProblem: probe dimension mismatch");
}

approx::SeriesModel solve_modified_helmholtz(const BoundaryProblem& problem, double tau, double n,
                                             double rank_tol) {
    if (!(tau > 0.0)) throw DomainError("solve_modified_helmholtz: tau must be > 0");
    if (!(n >= 2.0)) throw DomainError("solve_modified_helmholtz: n must be >= 2");
    const std::size_t dim = problem.boundary_points.empty() ? 0 : problem.boundary_points[0].size();
    return solve_kernel_collocation(problem, std::vector<double>(dim, 0.0), 1.0, tau, n, rank_tol);
}

approx::SeriesModel solve_convdiff(const BoundaryProblem& problem, const std::vector<double>& v,
                                   double D, double k, double n, double rank_tol) {
    PdeSpec spec;
    spec.op = PdeOperator::ConvectionDiffusion;
    spec.n = n;
    spec.v = v;
    spec.D = D;
    spec.k = k;
    spec.validate();
    return solve_kernel_collocation(problem, v, D, spec.effective_tau(), n, rank_tol);
}

approx::SeriesModel solve_winkler_plate(const BoundaryProblem& problem, double kappa, double n,
                                        double rank_tol) {
    if (!(kappa > 0.0)) throw DomainError("solve_winkler_plate: kappa must be > 0");
    if (!(n >= 2.0 && n <= 5.0)) throw DomainError("solve_winkler_plate: n must be in [2, 5]");
    problem.validate(/*needs_laplacians=*/true);
    require_distinct(problem.boundary_points);
    if (problem.boundary_points.front().size() != 2)
        throw DomainError("solve_winkler_plate: 2-D domains only");

    approx::BasisSpec basis;
    basis.family = approx::BasisFamily::WinklerSeries;
    basis.centers = problem.boundary_points;
    basis.scales = {kappa};
    basis.n = n;

    const std::size_t M = problem.boundary_points.size();
    const std::size_t n_mono = approx::monomials_up_to_total_degree(3).size();

    // Two rows per knot: the value condition is an ordinary design-matrix
    // row; the Laplacian condition uses closed forms. The complex Kelvin
    // column pair satisfies grad^2 (ber + i*bei) = i*kappa*(ber + i*bei), so
    // grad^2 ber = -kappa*bei and grad^2 bei = +kappa*ber.
    //
    // The leading monomial columns of the series basis solve the biharmonic
    // equation, not this plate equation, so the solver collocates only the
    // Kelvin block and keeps their coefficients at zero — any nonzero
    // monomial weight would violate the operator identically in the
    // interior while still fitting the boundary.
    Eigen::MatrixXd value_rows = approx::build_design_matrix(basis, problem.boundary_points);
    Eigen::MatrixXd A(2 * M, 2 * M);
    Eigen::VectorXd b(2 * M);
    for (std::size_t r = 0; r < M; ++r) {
        const auto row = static_cast<Eigen::Index>(r);
        A.row(row) = value_rows.row(row).tail(static_cast<Eigen::Index>(2 * M));
        b(row) = problem.boundary_values[r];

        const auto lrow = static_cast<Eigen::Index>(M + r);
        for (std::size_t c = 0; c < M; ++c) {
            const double ber = value_rows(row, static_cast<Eigen::Index>(n_mono + 2 * c));
            const double bei = value_rows(row, static_cast<Eigen::Index>(n_mono + 2 * c + 1));
            A(lrow, static_cast<Eigen::Index>(2 * c)) = -kappa * bei;
            A(lrow, static_cast<Eigen::Index>(2 * c + 1)) = kappa * ber;
        }
        b(lrow) = problem.boundary_laplacians[r];
    }

    auto [kelvin_coeffs, rank, residual] = approx::lstsq_minnorm(A, b, rank_tol);
    approx::SeriesModel model;
    model.basis = basis;
    model.coeffs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(basis.column_count()));
    model.coeffs.tail(static_cast<Eigen::Index>(2 * M)) = kelvin_coeffs;
    model.diagnostics = {rank, residual, rank_tol};
    return model;
}

double pde_residual_field(const std::function<double(const Point&)>& field, const PdeSpec& spec,
                          const Point& x, double h) {
    spec.validate();
    if (!(h > 0.0)) throw DomainError("pde_residual_field: h must be > 0");

    auto laplacian = [&](const std::function<double(const Point&)>& f, const Point& p) {
        double acc = 0.0;
        const double center = f(p);
        for (std::size_t d = 0; d < p.size(); ++d) {
            Point lo = p, hi = p;
            lo[d] -= h;
            hi[d] += h;
            acc += (f(hi) - 2.0 * center + f(lo)) / (h * h);
        }
        return acc;
    };

    switch (spec.op) {
        case PdeOperator::ModifiedHelmholtz:
            return std::abs(laplacian(field, x) - spec.tau * spec.tau * field(x));
        case PdeOperator::ConvectionDiffusion: {
            if (spec.v.size() != x.size())
                throw NumericalError("pde_residual_field: drift dimension mismatch");
            double conv = 0.0;
            for (std::size_t d = 0; d < x.size(); ++d) {
                Point lo = x, hi = x;
                lo[d] -= h;
                hi[d] += h;
                conv += spec.v[d] * (field(hi) - field(lo)) / (2.0 * h);
            }
            return std::abs(spec.D * laplacian(field, x) + conv - spec.k * field(x));
        }
        case PdeOperator::WinklerPlate: {
            auto lap_field = [&](const Point& p) { return laplacian(field, p); };
            const double bih = laplacian(lap_field, x);
            return std::abs(bih + spec.kappa * spec.kappa * field(x));
        }
    }
    throw NumericalError("pde_residual_field: unknown operator");
}

double pde_residual(const approx::SeriesModel& model, const PdeSpec& spec, const Point& x,
                    double h) {
    return pde_residual_field([&](const Point& p) { return approx::eval_series(model, p); }, spec,
                              x, h);
}

double domain_diameter(const std::vector<Point>& points) {
    double best = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            double d = 0.0;
            for (std::size_t k = 0; k < points[i].size(); ++k)
                d += (points[i][k] - points[j][k]) * (points[i][k] - points[j][k]);
            best = std::max(best, d);
        }
    return std::sqrt(best);
}

}  // namespace dfw::pdesolve
