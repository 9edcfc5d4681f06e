#include "dfw/kernels.hpp"

#include <cmath>

#include "dfw/specfun.hpp"

namespace dfw::kernels {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

double order_of(double n) { return 0.5 * n - 1.0; }

void require_positive_scale(double s) {
    if (!(s > 0.0)) throw DomainError("kernel: scale parameter must be > 0");
}

/// Surface area of the unit sphere in n dimensions, 2 pi^{n/2} / Gamma(n/2).
double unit_sphere_surface(double n) {
    return 2.0 * std::pow(kPi, 0.5 * n) / specfun::detail::gamma_fn(0.5 * n);
}

}  // namespace

void KernelSpec::validate() const {
    require_positive_scale(scale);
    if (!(norm > 0.0)) throw DomainError("kernel: normalization override must be > 0");
    switch (family) {
        case KernelFamily::EDecay:
        case KernelFamily::EOsc:
        case KernelFamily::HFJ:
            if (!(n >= 1.0)) throw DomainError("kernel: n must be >= 1");
            break;
        case KernelFamily::WinklerFund:
        case KernelFamily::WinklerGen:
            if (!(n >= 2.0 && n <= 5.0))
                throw DomainError("kernel: Winkler families require 2 <= n <= 5");
            break;
        case KernelFamily::BergerFund:
        case KernelFamily::BergerGen:
            if (!(n >= 2.0)) throw DomainError("kernel: Berger families require n >= 2");
            break;
        case KernelFamily::ConvDiffGen:
            if (!(n >= 2.0)) throw DomainError("kernel: ConvDiffGen requires n >= 2");
            if (!drift) throw DomainError("kernel: ConvDiffGen requires drift parameters");
            if (!(drift->D > 0.0)) throw DomainError("kernel: diffusivity D must be > 0");
            break;
    }
}

bool KernelSpec::is_singular_at_zero() const {
    switch (family) {
        case KernelFamily::EDecay:
        case KernelFamily::EOsc:
            return n > 1.0;
        case KernelFamily::WinklerFund:
        case KernelFamily::BergerFund:
            return true;
        default:
            return false;
    }
}

double eval_E_decay(double n, double lambda, double r) {
    require_positive_scale(lambda);
    if (!(n >= 1.0)) throw DomainError("eval_E_decay: n must be >= 1");
    if (r < 0.0) throw DomainError("eval_E_decay: r must be >= 0");
    if (n == 1.0) return std::sqrt(lambda) / kTwoPi * std::exp(-lambda * r);
    if (r == 0.0) throw SingularityError("eval_E_decay: singular at r = 0 for n >= 2");
    const double nu = order_of(n);
    const double pre = std::pow(lambda, 0.5 * (n - 1.0)) / kTwoPi;
    return pre * std::pow(kTwoPi * lambda * r, -nu) * specfun::detail::bessel_k(nu, lambda * r);
}

Complex eval_E_osc(double n, double lambda, double r) {
    require_positive_scale(lambda);
    if (!(n >= 1.0)) throw DomainError("eval_E_osc: n must be >= 1");
    if (r < 0.0) throw DomainError("eval_E_osc: r must be >= 0");
    if (n == 1.0) {
        const double a = std::sqrt(lambda) / kTwoPi;
        return {a * std::cos(lambda * r), a * std::sin(lambda * r)};
    }
    if (r == 0.0) throw SingularityError("eval_E_osc: singular at r = 0 for n >= 2");
    const double nu = order_of(n);
    const double x = lambda * r;
    // (i lambda^{(n-1)/2} / 4) (-2 pi i lambda r)^{-nu} (J_nu + i Y_nu),
    // principal branch of the complex power.
    const Complex pre = Complex(0.0, 0.25 * std::pow(lambda, 0.5 * (n - 1.0))) *
                        std::pow(Complex(0.0, -kTwoPi * x), -nu);
    return pre * Complex(specfun::detail::bessel_j(nu, x), specfun::detail::bessel_y(nu, x));
}

double eval_phi_J(double n, double lambda, double r) {
    require_positive_scale(lambda);
    if (!(n >= 1.0)) throw DomainError("eval_phi_J: n must be >= 1");
    if (r < 0.0) throw DomainError("eval_phi_J: r must be >= 0");
    if (n == 1.0) return 0.5 * std::sqrt(lambda) * std::cos(lambda * r);
    const double nu = order_of(n);
    const double pre = std::pow(lambda, 0.5 * (n - 1.0)) / kTwoPi;
    // (2 pi lambda r)^{-nu} J_nu(lambda r), finite at r = 0 via the scaled form.
    return pre * std::pow(kTwoPi, -nu) * specfun::detail::scaled_j(nu, lambda * r);
}

Complex eval_plate_kernel(KernelFamily family, double n, double param, double r) {
    require_positive_scale(param);
    if (r < 0.0) throw DomainError("eval_plate_kernel: r must be >= 0");
    const double nu = order_of(n);
    switch (family) {
        case KernelFamily::WinklerFund: {
            if (!(n >= 2.0 && n <= 5.0))
                throw DomainError("eval_plate_kernel: Winkler requires 2 <= n <= 5");
            if (r == 0.0)
                throw SingularityError("eval_plate_kernel: WinklerFund singular at r = 0");
            const double x = r * param;  // param = sqrt(kappa)
            const Complex kk = specfun::detail::ker_kei(nu, x);
            return Complex(0.0, 1.0 / kTwoPi) * std::pow(x, -nu) * kk;
        }
        case KernelFamily::WinklerGen: {
            if (!(n >= 2.0 && n <= 5.0))
                throw DomainError("eval_plate_kernel: Winkler requires 2 <= n <= 5");
            return specfun::detail::scaled_ber_bei(nu, r * param);
        }
        case KernelFamily::BergerFund: {
            if (!(n >= 2.0)) throw DomainError("eval_plate_kernel: Berger requires n >= 2");
            if (r == 0.0)
                throw SingularityError("eval_plate_kernel: BergerFund singular at r = 0");
            if (n == 2.0) {
                const double v = -1.0 / (kTwoPi * param * param) *
                                 (std::log(r) + specfun::detail::bessel_k(0.0, param * r));
                return {v, 0.0};
            }
            const double lead = std::pow(r, 2.0 - n) / ((n - 2.0) * unit_sphere_surface(n));
            const double tail = std::pow(param / (kTwoPi * r), -nu) *
                                specfun::detail::bessel_k(nu, param * r);
            return {lead + tail, 0.0};
        }
        case KernelFamily::BergerGen: {
            if (!(n >= 2.0)) throw DomainError("eval_plate_kernel: Berger requires n >= 2");
            // 1 + (alpha/(2 pi r))^{-nu} I_nu(alpha r); the alpha power cancels
            // into (2 pi r^2)^nu against the scaled I form, entire in r.
            const double v =
                1.0 + std::pow(kTwoPi * r * r, nu) * specfun::detail::scaled_i(nu, param * r);
            return {v, 0.0};
        }
        default:
            throw DomainError("eval_plate_kernel: not a plate kernel family");
    }
}

double eval_convdiff_gen(double n, double tau, const std::vector<double>& v, double D,
                         const Point& r_vec) {
    require_positive_scale(tau);
    if (!(n >= 2.0)) throw DomainError("eval_convdiff_gen: n must be >= 2");
    if (!(D > 0.0)) throw DomainError("eval_convdiff_gen: D must be > 0");
    if (v.size() != r_vec.size())
        throw NumericalError("eval_convdiff_gen: velocity/displacement dimension mismatch");
    double dot = 0.0, r2 = 0.0;
    for (std::size_t i = 0; i < r_vec.size(); ++i) {
        dot += v[i] * r_vec[i];
        r2 += r_vec[i] * r_vec[i];
    }
    const double r = std::sqrt(r2);
    const double nu = order_of(n);
    const double pre = std::pow(tau, 0.5 * (n - 1.0)) / kTwoPi;
    return pre * std::exp(-dot / (2.0 * D)) * std::pow(kTwoPi, -nu) *
           specfun::detail::scaled_i(nu, tau * r);
}

Complex kernel_value_radial(const KernelSpec& spec, double scale, double r) {
    switch (spec.family) {
        case KernelFamily::EDecay: return spec.norm * eval_E_decay(spec.n, scale, r);
        case KernelFamily::EOsc: return spec.norm * eval_E_osc(spec.n, scale, r);
        case KernelFamily::HFJ: return spec.norm * eval_phi_J(spec.n, scale, r);
        case KernelFamily::WinklerFund:
        case KernelFamily::WinklerGen:
        case KernelFamily::BergerFund:
        case KernelFamily::BergerGen:
            return spec.norm * eval_plate_kernel(spec.family, spec.n, scale, r);
        case KernelFamily::ConvDiffGen:
            throw DomainError("kernel_value_radial: ConvDiffGen needs a displacement vector");
    }
    throw DomainError("kernel_value_radial: unknown family");
}

Complex kernel_value(const KernelSpec& spec, double scale, const DistanceMetric& metric,
                     const Point& x, const Point& c) {
    const double r = distance(metric, x, c);
    if (spec.family == KernelFamily::ConvDiffGen) {
        if (!spec.drift) throw DomainError("kernel_value: ConvDiffGen requires drift");
        if (spec.drift->v.size() != x.size())
            throw NumericalError("kernel_value: drift velocity dimension mismatch");
        double dot = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) dot += spec.drift->v[i] * (x[i] - c[i]);
        const double nu = order_of(spec.n);
        const double pre = std::pow(scale, 0.5 * (spec.n - 1.0)) / kTwoPi;
        return spec.norm * pre * std::exp(-dot / (2.0 * spec.drift->D)) *
               std::pow(kTwoPi, -nu) * specfun::detail::scaled_i(nu, scale * r);
    }
    return kernel_value_radial(spec, scale, r);
}

}  // namespace dfw::kernels
