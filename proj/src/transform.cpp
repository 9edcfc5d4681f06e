#include "dfw/transform.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <numbers>

#include "dfw/errors.hpp"

namespace dfw::transform {

namespace {

constexpr double kPi = std::numbers::pi;

// Minimum-norm / Tikhonov-filtered least squares via SVD. A filter factor
// sigma / (sigma^2 + ridge) regularizes tiny singular values; ridge = 0
// falls back to plain pseudo-inverse with a relative rank cutoff.
Eigen::VectorXcd ridge_lstsq(const Eigen::MatrixXcd& A, const Eigen::VectorXcd& b, double ridge) {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    Eigen::VectorXcd utb = svd.matrixU().adjoint() * b;
    const double cutoff = sv.size() > 0 ? sv(0) * 1e-14 : 0.0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        const double s = sv(i);
        if (s <= cutoff)
            utb(i) = 0.0;
        else
            utb(i) *= s / (s * s + ridge);
    }
    return svd.matrixV() * utb;
}

}  // namespace

void SampleSet::validate() const {
    if (points.empty()) throw DomainError("SampleSet: empty");
    if (values.size() != points.size()) throw NumericalError("SampleSet: values/points size mismatch");
    if (!weights.empty() && weights.size() != points.size())
        throw NumericalError("SampleSet: weights/points size mismatch");
    for (double w : weights)
        if (!(w > 0.0)) throw DomainError("SampleSet: weights must be positive");
    const size_t dim = points.front().size();
    for (const auto& p : points)
        if (p.size() != dim) throw NumericalError("SampleSet: inconsistent point dimensions");
}

void CoefficientGrid::validate() const {
    if (scales.empty() || centers.empty()) throw DomainError("CoefficientGrid: empty");
    if (coeffs.rows() != static_cast<Eigen::Index>(scales.size()) ||
        coeffs.cols() != static_cast<Eigen::Index>(centers.size()))
        throw NumericalError("CoefficientGrid: coefficient shape mismatch");
    for (double s : scales)
        if (!(s > 0.0)) throw DomainError("CoefficientGrid: scales must be positive");
}

CoefficientGrid analyze(const SampleSet& samples, const std::vector<Point>& centers,
                        const std::vector<double>& scales, const kernels::KernelSpec& spec,
                        const DistanceMetric& metric) {
    samples.validate();
    if (centers.empty()) throw DomainError("analyze: no centers");
    if (scales.empty()) throw DomainError("analyze: no scales");
    for (double s : scales)
        if (!(s > 0.0)) throw DomainError("analyze: scales must be positive");
    spec.validate();

    const size_t M = scales.size();
    const size_t N = centers.size();
    const size_t K = samples.points.size();

    CoefficientGrid grid;
    grid.scales = scales;
    grid.centers = centers;
    grid.coeffs.resize(static_cast<Eigen::Index>(M), static_cast<Eigen::Index>(N));

    for (size_t j = 0; j < M; ++j) {
        for (size_t l = 0; l < N; ++l) {
            Complex acc = 0.0;
            for (size_t k = 0; k < K; ++k) {
                const double w = samples.weights.empty() ? 1.0 : samples.weights[k];
                acc += w * samples.values[k] *
                       kernels::kernel_value(spec, scales[j], metric, samples.points[k], centers[l]);
            }
            grid.coeffs(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(l)) = acc;
        }
    }
    return grid;
}

std::vector<Complex> synthesize(const CoefficientGrid& grid, const kernels::KernelSpec& spec,
                                const DistanceMetric& metric,
                                const std::vector<Point>& eval_points, SynthesisMode mode,
                                double ridge, const SampleSet* samples,
                                std::optional<double> n_g_override) {
    grid.validate();
    spec.validate();
    if (eval_points.empty()) throw DomainError("synthesize: no evaluation points");

    const size_t M = grid.scales.size();
    const size_t N = grid.centers.size();

    if (mode == SynthesisMode::Literal) {
        double ng;
        if (n_g_override)
            ng = *n_g_override;
        else if (grid.n_g)
            ng = *grid.n_g;
        else
            throw DomainError("synthesize: literal mode needs a calibrated or supplied N_g");
        if (!(std::isfinite(ng)) || ng == 0.0)
            throw DomainError("synthesize: N_g must be finite and nonzero");

        std::vector<Complex> out(eval_points.size(), Complex(0.0));
        for (size_t p = 0; p < eval_points.size(); ++p) {
            Complex acc = 0.0;
            for (size_t j = 0; j < M; ++j)
                for (size_t l = 0; l < N; ++l)
                    acc += grid.coeffs(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(l)) *
                           kernels::kernel_value(spec, grid.scales[j], metric, eval_points[p],
                                                 grid.centers[l]);
            out[p] = acc / ng;
        }
        return out;
    }

    // Least-squares inverse: refit expansion coefficients to the samples,
    // then evaluate the expansion. The analysis coefficients fix the
    // dictionary (scales x centers); their values are not reused.
    if (!samples) throw DomainError("synthesize: least-squares mode needs the sample set");
    samples->validate();

    const size_t K = samples->points.size();
    Eigen::MatrixXcd A(static_cast<Eigen::Index>(K), static_cast<Eigen::Index>(M * N));
    for (size_t k = 0; k < K; ++k)
        for (size_t j = 0; j < M; ++j)
            for (size_t l = 0; l < N; ++l)
                A(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j * N + l)) =
                    kernels::kernel_value(spec, grid.scales[j], metric, samples->points[k],
                                          grid.centers[l]);

    Eigen::VectorXcd b(static_cast<Eigen::Index>(K));
    for (size_t k = 0; k < K; ++k) b(static_cast<Eigen::Index>(k)) = samples->values[k];

    if (ridge < 0.0) ridge = 1e-10 * A.norm();
    Eigen::VectorXcd c = ridge_lstsq(A, b, ridge);

    std::vector<Complex> out(eval_points.size(), Complex(0.0));
    for (size_t p = 0; p < eval_points.size(); ++p) {
        Complex acc = 0.0;
        for (size_t j = 0; j < M; ++j)
            for (size_t l = 0; l < N; ++l)
                acc += c(static_cast<Eigen::Index>(j * N + l)) *
                       kernels::kernel_value(spec, grid.scales[j], metric, eval_points[p],
                                             grid.centers[l]);
        out[p] = acc;
    }
    return out;
}

double calibrate_ng(CoefficientGrid& grid, const SampleSet& samples,
                    const kernels::KernelSpec& spec, const DistanceMetric& metric) {
    samples.validate();
    grid.validate();

    // Literal reconstruction with N_g = 1, compared in the mean against the
    // samples: N_g = mean(real literal sums) / mean(f).
    std::vector<Complex> raw =
        synthesize(grid, spec, metric, samples.points, SynthesisMode::Literal, -1.0, nullptr, 1.0);

    double sum_raw = 0.0;
    double sum_f = 0.0;
    for (size_t k = 0; k < samples.points.size(); ++k) {
        sum_raw += raw[k].real();
        sum_f += samples.values[k];
    }
    if (std::abs(sum_f) < 1e-300) throw NumericalError("calibrate_ng: samples have zero mean");
    const double ng = sum_raw / sum_f;
    if (!std::isfinite(ng) || ng == 0.0) throw NumericalError("calibrate_ng: degenerate normalization");
    grid.n_g = ng;
    return ng;
}

std::vector<double> frac_deriv_1d(const std::vector<double>& values, double step, double m) {
    const size_t n = values.size();
    if (n < 4) throw DomainError("frac_deriv_1d: need at least 4 samples");
    if (!(step > 0.0)) throw DomainError("frac_deriv_1d: step must be positive");
    if (m == 0.0) return values;

    // Naive DFT; grids here are small and exactness matters more than speed.
    std::vector<Complex> hat(n, Complex(0.0));
    for (size_t k = 0; k < n; ++k) {
        Complex acc = 0.0;
        for (size_t j = 0; j < n; ++j)
            acc += values[j] * std::exp(Complex(0.0, -2.0 * kPi * double(k) * double(j) / double(n)));
        hat[k] = acc;
    }

    const double L = step * double(n);
    for (size_t k = 0; k < n; ++k) {
        // Signed frequency: modes above n/2 are negative.
        double kk = (k <= n / 2) ? double(k) : double(k) - double(n);
        if (2 * k == n) kk = 0.0;  // Nyquist mode has no well-defined sign; drop it
        const double omega = 2.0 * kPi * kk / L;
        if (omega == 0.0) {
            if (m > 0.0)
                hat[k] = 0.0;  // (i*0)^m = 0 for positive order
            else
                hat[k] = 0.0;  // integration: zero mode has no primitive; zeroed
            continue;
        }
        const double mag = std::pow(std::abs(omega), m);
        const double phase = m * (kPi / 2.0) * (omega > 0.0 ? 1.0 : -1.0);
        hat[k] *= Complex(mag * std::cos(phase), mag * std::sin(phase));
    }

    std::vector<double> out(n, 0.0);
    for (size_t j = 0; j < n; ++j) {
        Complex acc = 0.0;
        for (size_t k = 0; k < n; ++k)
            acc += hat[k] * std::exp(Complex(0.0, 2.0 * kPi * double(k) * double(j) / double(n)));
        out[j] = acc.real() / double(n);
    }
    return out;
}

}  // namespace dfw::transform
