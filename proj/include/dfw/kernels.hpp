#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "dfw/point.hpp"

namespace dfw::kernels {

using Complex = std::complex<double>;

enum class KernelFamily {
    EDecay,       // decaying Helmholtz-Laplace kernel
    EOsc,         // oscillatory Helmholtz-Fourier kernel (complex)
    HFJ,          // nonsingular J-Bessel kernel
    WinklerFund,  // Winkler plate fundamental solution (ker/kei)
    WinklerGen,   // Winkler plate general solution (ber/bei)
    BergerFund,   // Berger plate fundamental solution
    BergerGen,    // Berger plate general solution
    ConvDiffGen,  // convection-diffusion general solution (drift-weighted I-Bessel)
};

struct Drift {
    std::vector<double> v;  // velocity
    double D = 1.0;         // diffusivity
    bool operator==(const Drift&) const = default;
};

/// Kernel family selector plus dimensionality n (real, fractional allowed)
/// and scale parameter (lambda, sqrt(kappa), alpha or tau depending on the
/// family). `norm` is a user normalization override; the constants C_n, C_J,
/// C_psi are undefined in the source formulas, so the default is 1.
struct KernelSpec {
    KernelFamily family = KernelFamily::HFJ;
    double n = 2.0;
    double scale = 1.0;
    std::optional<Drift> drift;  // ConvDiffGen only
    double norm = 1.0;

    void validate() const;
    bool is_singular_at_zero() const;
    bool operator==(const KernelSpec&) const = default;
};

// Individual kernel families. nu = n/2 - 1 throughout; the n = 1 formulas
// are explicit separate branches, and 1 < n < 2 reaches nu in (-1/2, 0)
// through reflection inside the special-function layer.

double eval_E_decay(double n, double lambda, double r);
Complex eval_E_osc(double n, double lambda, double r);
double eval_phi_J(double n, double lambda, double r);
Complex eval_plate_kernel(KernelFamily family, double n, double param, double r);
double eval_convdiff_gen(double n, double tau, const std::vector<double>& v, double D,
                         const Point& r_vec);

/// Kernel value for the transform layer: evaluates the spec's family with
/// the given scale at displacement x - c. Radial families see only the
/// metric distance; ConvDiffGen additionally uses the raw displacement for
/// its drift factor. Result is multiplied by spec.norm.
Complex kernel_value(const KernelSpec& spec, double scale, const DistanceMetric& metric,
                     const Point& x, const Point& c);

/// Radial-only entry point (throws for ConvDiffGen, which needs direction).
Complex kernel_value_radial(const KernelSpec& spec, double scale, double r);

}  // namespace dfw::kernels
