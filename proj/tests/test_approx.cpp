#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "dfw/approx.hpp"
#include "dfw/errors.hpp"

using namespace dfw;
using namespace dfw::approx;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Point> unit_square_grid(int side) {
    std::vector<Point> pts;
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j)
            pts.push_back({double(i) / std::max(side - 1, 1), double(j) / std::max(side - 1, 1)});
    return pts;
}

std::vector<Point> random_points(std::mt19937& rng, int count, double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    std::vector<Point> pts;
    for (int i = 0; i < count; ++i) pts.push_back({d(rng), d(rng)});
    return pts;
}

transform::SampleSet in_span_samples(const BasisSpec& basis, const std::vector<Point>& pts,
                                     std::mt19937& rng) {
    Eigen::MatrixXd A = build_design_matrix(basis, pts);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    Eigen::VectorXd c(A.cols());
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = d(rng);
    Eigen::VectorXd b = A * c;
    transform::SampleSet s;
    s.points = pts;
    s.values.assign(b.data(), b.data() + b.size());
    return s;
}

double max_sample_residual(const SeriesModel& model, const transform::SampleSet& s) {
    double worst = 0.0;
    for (std::size_t i = 0; i < s.points.size(); ++i)
        worst = std::max(worst, std::abs(eval_series(model, s.points[i]) - s.values[i]));
    return worst;
}

}  // namespace

TEST_CASE("PolyDFW canonical columns for one center, nx = ny = 1") {
    BasisSpec b;
    b.family = BasisFamily::PolyDFW;
    b.centers = {{0.0, 0.0}};
    b.nx = b.ny = 1;
    auto A = build_design_matrix(b, {{2.0, 3.0}});
    REQUIRE(A.cols() == 4);
    CHECK(A(0, 0) == 1.0);  // shared constant
    CHECK(A(0, 1) == 3.0);  // y
    CHECK(A(0, 2) == 2.0);  // x
    CHECK(A(0, 3) == 6.0);  // xy
}

TEST_CASE("MQ at zero shape is the plain distance") {
    BasisSpec b;
    b.family = BasisFamily::MQ;
    b.centers = {{1.0, 1.0}};
    b.shapes = {0.0};
    auto A = build_design_matrix(b, {{4.0, 5.0}});
    CHECK(A(0, 0) == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("TrigDFW direct substitution") {
    BasisSpec b;
    b.family = BasisFamily::TrigDFW;
    b.centers = {{0.0, 0.0}};
    b.nx = 1;
    b.ny = 0;
    auto A = build_design_matrix(b, {{0.25, 0.8}});
    // columns: (i=0,j=0), (i=1,j=0); the second is sin(pi/2) cos(0) = 1
    REQUIRE(A.cols() == 2);
    CHECK(A(0, 0) == 0.0);
    CHECK(A(0, 1) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("lstsq_minnorm basics") {
    Eigen::MatrixXd I = Eigen::MatrixXd::Identity(5, 5);
    Eigen::VectorXd b(5);
    b << 1, -2, 3, 0.5, 4;
    auto [x, rank, res] = lstsq_minnorm(I, b, 1e-10);
    CHECK(rank == 5);
    CHECK((x - b).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(res < 1e-14);

    // duplicate columns: minimum norm splits the weight equally
    Eigen::MatrixXd D(3, 2);
    D << 1, 1, 2, 2, 3, 3;
    Eigen::VectorXd rhs = D.col(0) * 4.0;
    auto [xd, rankd, resd] = lstsq_minnorm(D, rhs, 1e-10);
    CHECK(rankd == 1);
    CHECK(std::abs(xd(0) - 2.0) < 1e-12);
    CHECK(std::abs(xd(1) - 2.0) < 1e-12);

    CHECK_THROWS_AS(lstsq_minnorm(Eigen::MatrixXd(), Eigen::VectorXd(), 1e-10), DomainError);
    Eigen::MatrixXd Z = Eigen::MatrixXd::Zero(3, 2);
    Eigen::VectorXd z3 = Eigen::VectorXd::Ones(3);
    CHECK_THROWS_AS(lstsq_minnorm(Z, z3, 1e-10), NumericalError);
}

TEST_CASE("lstsq_minnorm matches a normal-equations oracle on a well-conditioned system") {
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    Eigen::MatrixXd A(50, 20);
    for (Eigen::Index i = 0; i < A.size(); ++i) A(i / 20, i % 20) = d(rng);
    A += 2.0 * Eigen::MatrixXd::Identity(50, 20);  // keep it far from singular
    Eigen::VectorXd b(50);
    for (Eigen::Index i = 0; i < 50; ++i) b(i) = d(rng);

    auto [x, rank, res] = lstsq_minnorm(A, b, 1e-10);
    CHECK(rank == 20);
    Eigen::VectorXd oracle = (A.transpose() * A).ldlt().solve(A.transpose() * b);
    CHECK((x - oracle).norm() / oracle.norm() < 1e-8);
}

TEST_CASE("fit reproduces an in-span affine target and evaluates correctly") {
    BasisSpec b;
    b.family = BasisFamily::PolyDFW;
    b.centers = {{0.2, 0.4}, {0.8, 0.1}};
    b.nx = b.ny = 1;

    transform::SampleSet s;
    s.points = unit_square_grid(5);
    for (const auto& p : s.points) s.values.push_back(3.0 + 2.0 * p[0] - p[1]);

    auto model = fit_series(b, s);
    CHECK(max_sample_residual(model, s) < 1e-9);
    CHECK(std::abs(eval_series(model, {0.3, 0.7}) - 2.9) < 1e-8);
}

TEST_CASE("randomized in-span reproduction across families") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 20; ++trial) {
        auto pts = random_points(rng, 40, 0.05, 0.95);

        BasisSpec poly;
        poly.family = BasisFamily::PolyDFW;
        poly.centers = random_points(rng, 3, 0.0, 1.0);
        poly.nx = poly.ny = 2;
        auto sp = in_span_samples(poly, pts, rng);
        CHECK(max_sample_residual(fit_series(poly, sp), sp) < 1e-8);

        BasisSpec trig;
        trig.family = BasisFamily::TrigDFW;
        trig.centers = random_points(rng, 2, 0.0, 1.0);
        trig.nx = trig.ny = 1;
        auto st = in_span_samples(trig, pts, rng);
        CHECK(max_sample_residual(fit_series(trig, st), st) < 1e-8);

        BasisSpec mq;
        mq.family = BasisFamily::MQ;
        mq.centers = random_points(rng, 6, 0.0, 1.0);
        mq.shapes.assign(6, 0.3);
        auto sm = in_span_samples(mq, pts, rng);
        CHECK(max_sample_residual(fit_series(mq, sm), sm) < 1e-8);

        BasisSpec wink;
        wink.family = BasisFamily::WinklerSeries;
        wink.centers = random_points(rng, 2, 0.0, 1.0);
        wink.scales = {1.0, 3.0};
        wink.n = 2.0;
        auto sw = in_span_samples(wink, pts, rng);
        CHECK(max_sample_residual(fit_series(wink, sw), sw) < 1e-8);
    }
}

TEST_CASE("WinklerSeries hits a single Kelvin column exactly") {
    BasisSpec b;
    b.family = BasisFamily::WinklerSeries;
    b.centers = {{0.5, 0.5}};
    b.scales = {2.0};
    b.n = 2.0;

    std::mt19937 rng(31);
    auto pts = random_points(rng, 30, 0.0, 1.0);
    Eigen::MatrixXd A = build_design_matrix(b, pts);
    // the ber column is the first Kelvin column after the 10 cubic monomials
    transform::SampleSet s;
    s.points = pts;
    for (Eigen::Index i = 0; i < A.rows(); ++i) s.values.push_back(A(i, 10));
    auto model = fit_series(b, s);
    CHECK(max_sample_residual(model, s) < 1e-8);
}

TEST_CASE("prediction invariance under sample and center permutation") {
    std::mt19937 rng(99);
    BasisSpec b;
    b.family = BasisFamily::PolyDFW;
    b.centers = random_points(rng, 4, 0.0, 1.0);
    b.nx = b.ny = 2;

    transform::SampleSet s;
    s.points = random_points(rng, 60, 0.0, 1.0);
    for (const auto& p : s.points)
        s.values.push_back(std::sin(3.0 * p[0]) * std::exp(-p[1]));

    auto model = fit_series(b, s);

    transform::SampleSet shuffled = s;
    std::vector<std::size_t> perm(s.points.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        shuffled.points[i] = s.points[perm[i]];
        shuffled.values[i] = s.values[perm[i]];
    }
    BasisSpec centers_perm = b;
    std::reverse(centers_perm.centers.begin(), centers_perm.centers.end());

    auto model_shuffled = fit_series(b, shuffled);
    auto model_centers = fit_series(centers_perm, s);

    for (const auto& p : random_points(rng, 40, 0.0, 1.0)) {
        const double base = eval_series(model, p);
        CHECK(std::abs(eval_series(model_shuffled, p) - base) < 1e-8);
        CHECK(std::abs(eval_series(model_centers, p) - base) < 1e-8);
    }
}

TEST_CASE("ConvDiffPolyDFW with zero drift equals PolyDFW exactly") {
    std::mt19937 rng(5);
    auto pts = random_points(rng, 25, -1.0, 1.0);

    BasisSpec poly;
    poly.family = BasisFamily::PolyDFW;
    poly.centers = random_points(rng, 3, -1.0, 1.0);
    poly.nx = 2;
    poly.ny = 1;

    BasisSpec cd = poly;
    cd.family = BasisFamily::ConvDiffPolyDFW;
    cd.v = {0.0, 0.0};
    cd.diffusivity = 1.5;

    CHECK(build_design_matrix(poly, pts) == build_design_matrix(cd, pts));
}

TEST_CASE("PolarDFW columns match the direct trigonometric expansion") {
    std::mt19937 rng(17);
    // centers on a common ray: same polar angle theta_0
    const double theta0 = 0.7;
    BasisSpec b;
    b.family = BasisFamily::PolarDFW;
    for (double rho : {0.5, 1.0, 2.0})
        b.centers.push_back({rho * std::cos(theta0), rho * std::sin(theta0)});
    b.degree = 3;

    auto pts = random_points(rng, 20, 0.1, 2.0);
    auto A = build_design_matrix(b, pts);
    for (std::size_t p = 0; p < pts.size(); ++p) {
        const double theta = std::atan2(pts[p][1], pts[p][0]);
        Eigen::Index col = 1;
        for (std::size_t k = 0; k < b.centers.size(); ++k) {
            const double dx = pts[p][0] - b.centers[k][0];
            const double dy = pts[p][1] - b.centers[k][1];
            const double r = std::hypot(dx, dy);
            for (int j = 1; j <= b.degree; ++j) {
                const double rj = std::pow(r, j);
                CHECK(std::abs(A(Eigen::Index(p), col++) - rj * std::sin(j * (theta - theta0))) <
                      1e-10);
                CHECK(std::abs(A(Eigen::Index(p), col++) - rj * std::cos(j * (theta - theta0))) <
                      1e-10);
            }
        }
    }

    CHECK_THROWS_AS(build_design_matrix(b, {{0.0, 0.0}}), DomainError);
}

TEST_CASE("coefficient thresholding") {
    SeriesModel m;
    m.basis.family = BasisFamily::MQ;
    m.basis.centers = {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}};
    m.coeffs.resize(3);
    m.coeffs << 10.0, 1e-6, -0.5;
    CHECK(threshold_coefficients(m, 1e-4) == 1);
    CHECK(m.coeffs(1) == 0.0);
    CHECK(m.coeffs(0) == 10.0);
    CHECK(m.coeffs(2) == -0.5);
}

TEST_CASE("interpolation limit: square full-rank system hits the samples") {
    std::mt19937 rng(2024);
    BasisSpec mq;
    mq.family = BasisFamily::MQ;
    mq.centers = random_points(rng, 12, 0.0, 1.0);
    mq.shapes.assign(12, 0.4);

    transform::SampleSet s;
    s.points = mq.centers;  // 12 columns, 12 samples
    for (const auto& p : s.points) s.values.push_back(std::cos(2.0 * p[0] + p[1]));
    auto model = fit_series(mq, s);
    CHECK(max_sample_residual(model, s) < 1e-8);
}
