#pragma once

#include <complex>

#include "dfw/errors.hpp"

namespace dfw::specfun {

enum class BesselKind { J, Y, I, K };
enum class KelvinKind { ber, bei, ker, kei };

/// Bessel function of the given kind at real order >= 0.
///
/// J, I accept x >= 0; Y, K require x > 0. Target accuracy is relative
/// 1e-10 for x in [1e-6, 50] and order in [0, 5] (full precision over most
/// of that range). Small arguments use power series (or Temme's uniform
/// series for Y), large arguments use asymptotic expansions at a base order
/// in [0, 1) followed by upward recurrence; the series/asymptotic
/// switchover sits at x = max(12, 2*order). Overflow of the result is
/// reported as OverflowError, never returned as infinity.
double bessel(BesselKind kind, double order, double x);

/// Kelvin function at real order >= 0.
///
/// Convention (documented choice; the usual principal-branch one):
///   ber_nu(x) + i*bei_nu(x) = J_nu(x * e^{3*pi*i/4})
///   ker_nu(x) + i*kei_nu(x) = e^{-nu*pi*i/2} * K_nu(x * e^{i*pi/4})
/// ber/bei accept x >= 0; ker/kei require x > 0.
double kelvin(KelvinKind kind, double order, double x);

namespace detail {

/// Lanczos gamma (accurate to ~1e-14 relative); poles raise DomainError.
double gamma_fn(double x);

// Signed-order entry points used by the kernel layer for the fractional
// dimensionality sliver n in (1,2), i.e. order in (-1/2, 0). Orders below
// -1 are not supported.
double bessel_j(double nu, double x);
double bessel_y(double nu, double x);
double bessel_i(double nu, double x);
double bessel_k(double nu, double x);

// Scaled forms, entire in x (well defined at x = 0 for any nu > -1):
//   scaled_j(nu, x) = x^{-nu} * J_nu(x)
//   scaled_i(nu, x) = x^{-nu} * I_nu(x)
double scaled_j(double nu, double x);
double scaled_i(double nu, double x);

/// x^{-nu} * (ber_nu(x) + i*bei_nu(x)), entire in x (the Winkler general
/// solution profile of the plate kernels).
std::complex<double> scaled_ber_bei(double nu, double x);

/// ber_nu + i*bei_nu and ker_nu + i*kei_nu as complex pairs.
std::complex<double> ber_bei(double nu, double x);
std::complex<double> ker_kei(double nu, double x);

}  // namespace detail

}  // namespace dfw::specfun
