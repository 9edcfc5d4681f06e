#include "dfw/approx.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <numbers>

#include "dfw/errors.hpp"
#include "dfw/kernels.hpp"
#include "dfw/specfun.hpp"

namespace dfw::approx {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_2d(const Point& p, const char* what) {
    if (p.size() != 2) throw DomainError(std::string(what) + ": requires 2-D points");
}

double norm2(const Point& p) {
    double s = 0.0;
    for (double v : p) s += v * v;
    return std::sqrt(s);
}

double dist(const Point& a, const Point& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

// Signed angle between the position vectors of the point and the center.
double angle_between(const Point& p, const Point& c) {
    if (norm2(p) == 0.0 || norm2(c) == 0.0)
        throw DomainError("PolarDFW: angle undefined at the origin");
    const double cross = c[0] * p[1] - c[1] * p[0];
    const double dot = c[0] * p[0] + c[1] * p[1];
    return std::atan2(cross, dot);
}

double drift_weight(const std::vector<double>& v, double D, const Point& x, const Point& c) {
    double dot = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) dot += v[i] * (x[i] - c[i]);
    return std::exp(-dot / (2.0 * D));
}

}  // namespace

std::vector<std::pair<int, int>> monomials_up_to_total_degree(int max_total) {
    std::vector<std::pair<int, int>> out;
    for (int t = 0; t <= max_total; ++t)
        for (int i = t; i >= 0; --i) out.emplace_back(i, t - i);
    return out;
}

void BasisSpec::validate() const {
    if (centers.empty()) throw DomainError("BasisSpec: at least one center required");
    const std::size_t dim = centers.front().size();
    for (const auto& c : centers)
        if (c.size() != dim) throw NumericalError("BasisSpec: inconsistent center dimensions");

    switch (family) {
        case BasisFamily::PolyDFW:
        case BasisFamily::TrigDFW:
            if (nx < 0 || ny < 0) throw DomainError("BasisSpec: degree bounds must be >= 0");
            if (dim != 2) throw DomainError("BasisSpec: family requires 2-D centers");
            break;
        case BasisFamily::ConvDiffPolyDFW:
            if (nx < 0 || ny < 0) throw DomainError("BasisSpec: degree bounds must be >= 0");
            if (dim != 2) throw DomainError("BasisSpec: family requires 2-D centers");
            if (v.size() != dim) throw DomainError("BasisSpec: drift velocity dimension mismatch");
            if (!(diffusivity > 0.0)) throw DomainError("BasisSpec: diffusivity must be > 0");
            if (use_general_solution && !(tau > 0.0))
                throw DomainError("BasisSpec: tau must be > 0");
            break;
        case BasisFamily::PolarDFW:
            if (degree < 0) throw DomainError("BasisSpec: degree must be >= 0");
            if (dim != 2) throw DomainError("BasisSpec: family requires 2-D centers");
            break;
        case BasisFamily::MQ:
            if (!shapes.empty() && shapes.size() != centers.size())
                throw DomainError("BasisSpec: shapes must match centers");
            for (double s : shapes)
                if (!(s >= 0.0)) throw DomainError("BasisSpec: shapes must be >= 0");
            break;
        case BasisFamily::WinklerSeries:
            if (scales.empty()) throw DomainError("BasisSpec: stiffness list required");
            for (double s : scales)
                if (!(s > 0.0)) throw DomainError("BasisSpec: stiffness must be > 0");
            if (!(n >= 2.0 && n <= 5.0))
                throw DomainError("BasisSpec: WinklerSeries requires 2 <= n <= 5");
            if (dim != 2) throw DomainError("BasisSpec: family requires 2-D centers");
            break;
        case BasisFamily::ConvDiffKernel:
            if (!(tau > 0.0)) throw DomainError("BasisSpec: tau must be > 0");
            if (!(n >= 2.0)) throw DomainError("BasisSpec: n must be >= 2");
            if (!(diffusivity > 0.0)) throw DomainError("BasisSpec: diffusivity must be > 0");
            if (!v.empty() && v.size() != dim)
                throw DomainError("BasisSpec: drift velocity dimension mismatch");
            break;
    }
}

std::size_t BasisSpec::column_count() const {
    const std::size_t M = centers.size();
    const std::size_t grid = std::size_t(nx + 1) * std::size_t(ny + 1);
    switch (family) {
        case BasisFamily::PolyDFW:
            return 1 + M * (grid - 1);
        case BasisFamily::ConvDiffPolyDFW:
            return use_general_solution ? M * grid : 1 + M * (grid - 1);
        case BasisFamily::TrigDFW:
            return M * grid;
        case BasisFamily::PolarDFW:
            return 1 + M * std::size_t(degree) * 2;
        case BasisFamily::MQ:
            return M;
        case BasisFamily::WinklerSeries:
            return monomials_up_to_total_degree(3).size() + scales.size() * M * 2;
        case BasisFamily::ConvDiffKernel:
            return M;
    }
    throw NumericalError("BasisSpec: unknown family");
}

Eigen::MatrixXd build_design_matrix(const BasisSpec& basis, const std::vector<Point>& points) {
    basis.validate();
    if (points.empty()) throw DomainError("build_design_matrix: no points");
    const std::size_t dim = basis.centers.front().size();
    for (const auto& p : points)
        if (p.size() != dim) throw NumericalError("build_design_matrix: point dimension mismatch");

    const std::size_t M = basis.centers.size();
    const auto R = static_cast<Eigen::Index>(points.size());
    Eigen::MatrixXd A(R, static_cast<Eigen::Index>(basis.column_count()));

    for (Eigen::Index row = 0; row < R; ++row) {
        const Point& p = points[static_cast<std::size_t>(row)];
        Eigen::Index col = 0;

        switch (basis.family) {
            case BasisFamily::PolyDFW:
            case BasisFamily::ConvDiffPolyDFW: {
                const bool gen = basis.family == BasisFamily::ConvDiffPolyDFW &&
                                 basis.use_general_solution;
                const bool drift = basis.family == BasisFamily::ConvDiffPolyDFW && !gen;
                if (!gen) A(row, col++) = 1.0;
                for (std::size_t k = 0; k < M; ++k) {
                    const Point& c = basis.centers[k];
                    const double dx = p[0] - c[0];
                    const double dy = p[1] - c[1];
                    double w = 1.0;
                    if (drift) w = drift_weight(basis.v, basis.diffusivity, p, c);
                    if (gen) {
                        Point disp = {dx, dy};
                        w = kernels::eval_convdiff_gen(basis.n, basis.tau, basis.v,
                                                       basis.diffusivity, disp);
                    }
                    for (int i = 0; i <= basis.nx; ++i)
                        for (int j = 0; j <= basis.ny; ++j) {
                            if (!gen && i == 0 && j == 0) continue;
                            A(row, col++) = w * std::pow(dx, i) * std::pow(dy, j);
                        }
                }
                break;
            }
            case BasisFamily::TrigDFW: {
                for (std::size_t k = 0; k < M; ++k) {
                    const Point& c = basis.centers[k];
                    const double dx = p[0] - c[0];
                    const double dy = p[1] - c[1];
                    for (int i = 0; i <= basis.nx; ++i)
                        for (int j = 0; j <= basis.ny; ++j)
                            A(row, col++) = std::sin(kTwoPi * i * dx) * std::cos(kTwoPi * j * dy);
                }
                break;
            }
            case BasisFamily::PolarDFW: {
                require_2d(p, "PolarDFW");
                A(row, col++) = 1.0;
                for (std::size_t k = 0; k < M; ++k) {
                    const Point& c = basis.centers[k];
                    const double dtheta = angle_between(p, c);
                    const double r = dist(p, c);
                    for (int j = 1; j <= basis.degree; ++j) {
                        const double rj = std::pow(r, j);
                        A(row, col++) = rj * std::sin(j * dtheta);
                        A(row, col++) = rj * std::cos(j * dtheta);
                    }
                }
                break;
            }
            case BasisFamily::MQ: {
                for (std::size_t k = 0; k < M; ++k) {
                    const double s = basis.shapes.empty() ? 0.0 : basis.shapes[k];
                    const double r = dist(p, basis.centers[k]);
                    A(row, col++) = std::sqrt(r * r + s * s);
                }
                break;
            }
            case BasisFamily::WinklerSeries: {
                // Biharmonic part: every 2-D polynomial of total degree <= 3
                // satisfies the fourth-order homogeneous equation identically.
                for (auto [i, j] : monomials_up_to_total_degree(3))
                    A(row, col++) = std::pow(p[0], i) * std::pow(p[1], j);
                const double nu = basis.n / 2.0 - 1.0;
                for (double kappa : basis.scales) {
                    const double root = std::sqrt(kappa);
                    for (std::size_t k = 0; k < M; ++k) {
                        const double x = dist(p, basis.centers[k]) * root;
                        const auto bb = specfun::detail::scaled_ber_bei(nu, x);
                        A(row, col++) = bb.real();
                        A(row, col++) = bb.imag();
                    }
                }
                break;
            }
            case BasisFamily::ConvDiffKernel: {
                const std::vector<double> v0(dim, 0.0);
                const std::vector<double>& vel = basis.v.empty() ? v0 : basis.v;
                for (std::size_t k = 0; k < M; ++k) {
                    Point disp(dim);
                    for (std::size_t d = 0; d < dim; ++d) disp[d] = p[d] - basis.centers[k][d];
                    A(row, col++) = kernels::eval_convdiff_gen(basis.n, basis.tau, vel,
                                                               basis.diffusivity, disp);
                }
                break;
            }
        }
        if (col != A.cols()) throw NumericalError("build_design_matrix: column count mismatch");
    }
    return A;
}

std::tuple<Eigen::VectorXd, long, double> lstsq_minnorm(const Eigen::MatrixXd& A,
                                                        const Eigen::VectorXd& b, double rank_tol) {
    if (A.rows() == 0 || A.cols() == 0) throw DomainError("lstsq_minnorm: empty matrix");
    if (A.rows() != b.size()) throw NumericalError("lstsq_minnorm: row/rhs mismatch");
    if (!(rank_tol >= 0.0)) throw DomainError("lstsq_minnorm: rank_tol must be >= 0");

    Eigen::BDCSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double cutoff = sv.size() > 0 ? rank_tol * sv(0) : 0.0;

    Eigen::VectorXd utb = svd.matrixU().transpose() * b;
    long rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cutoff && sv(i) > 0.0) {
            utb(i) /= sv(i);
            ++rank;
        } else {
            utb(i) = 0.0;
        }
    }
    if (rank == 0) throw NumericalError("lstsq_minnorm: matrix is numerically zero");

    Eigen::VectorXd x = svd.matrixV() * utb;
    const double residual = (A * x - b).norm();
    return {x, rank, residual};
}

SeriesModel fit_series(const BasisSpec& basis, const transform::SampleSet& samples,
                       double rank_tol) {
    samples.validate();
    Eigen::MatrixXd A = build_design_matrix(basis, samples.points);
    Eigen::VectorXd b(static_cast<Eigen::Index>(samples.values.size()));
    for (std::size_t i = 0; i < samples.values.size(); ++i)
        b(static_cast<Eigen::Index>(i)) = samples.values[i];
    if (!samples.weights.empty()) {
        for (std::size_t i = 0; i < samples.weights.size(); ++i) {
            const double w = std::sqrt(samples.weights[i]);
            A.row(static_cast<Eigen::Index>(i)) *= w;
            b(static_cast<Eigen::Index>(i)) *= w;
        }
    }

    auto [coeffs, rank, residual] = lstsq_minnorm(A, b, rank_tol);
    SeriesModel model;
    model.basis = basis;
    model.coeffs = std::move(coeffs);
    model.diagnostics = {rank, residual, rank_tol};
    return model;
}

double eval_series(const SeriesModel& model, const Point& x) {
    Eigen::MatrixXd row = build_design_matrix(model.basis, {x});
    if (row.cols() != model.coeffs.size())
        throw NumericalError("eval_series: coefficient/basis size mismatch");
    return row.row(0).dot(model.coeffs);
}

std::size_t threshold_coefficients(SeriesModel& model, double threshold) {
    if (!(threshold >= 0.0)) throw DomainError("threshold_coefficients: threshold must be >= 0");
    const double cmax = model.coeffs.size() > 0 ? model.coeffs.cwiseAbs().maxCoeff() : 0.0;
    const double cut = threshold * cmax;
    std::size_t dropped = 0;
    for (Eigen::Index i = 0; i < model.coeffs.size(); ++i) {
        if (model.coeffs(i) != 0.0 && std::abs(model.coeffs(i)) < cut) {
            model.coeffs(i) = 0.0;
            ++dropped;
        }
    }
    return dropped;
}

}  // namespace dfw::approx
