#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace czeta {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// z^w = exp(w * (ln|z| + i arg z)) with arg z restricted to [-pi/2, pi/2].
///
/// Only defined on the closed right half-plane, where this branch is
/// unambiguous. A signed zero real part is treated as +0, so the imaginary
/// axis maps to arg = +-pi/2. Positive real z with real w goes through
/// std::pow and yields an exactly real result.
///
/// Throws DomainError if Re z < 0, or if z = 0 and Re w <= 0.
Complex cpow_principal(Complex z, Complex w);

/// sin(pi x) and cos(pi x) with exact zeros at the integers and half-integers.
double sin_pi(double x);
double cos_pi(double x);

/// sin(pi z) via sin(pi x) cosh(pi y) + i cos(pi x) sinh(pi y).
/// Throws DomainError for |Im z| > 300, OverflowError if cosh(pi y) overflows.
Complex sin_pi_z(Complex z);
Complex cos_pi_z(Complex z);

/// 1 / cosh^2(pi y), evaluated without overflow; exactly 0 once e^{-2 pi |y|} underflows.
double sech_sq_pi(double y);

/// 1 / sinh^2(t / 2) for t > 0. Below t = 1e-4 the Laurent series is used.
double csch_sq_half(double t);

/// Natural log of Gamma. For Re z >= 1/2 this is the Lanczos form (g = 7, n = 9);
/// the left half-plane uses reflection with log sin(pi z) taken on the branch
/// continuous in each open half-plane, so the result is the principal
/// log-gamma off the negative real axis.
/// Throws PoleError within 1e-12 of a non-positive integer.
Complex log_gamma(Complex z);

/// Gamma(z). Real and exact-sign on the real axis; reflection for Re z < 1/2.
Complex gamma(Complex z);

/// True when both components are finite.
inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace czeta
