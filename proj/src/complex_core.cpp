#include "czeta/complex_core.hpp"

#include <array>
#include <string>

#include "czeta/errors.hpp"

namespace czeta {

namespace {

// Godfrey's coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

const double kHalfLog2Pi = 0.5 * std::log(2.0 * kPi);
const double kLogPi = std::log(kPi);
const double kLn2 = std::log(2.0);

constexpr double kPoleRadius = 1e-12;

void check_pole(Complex z) {
  const double n = std::nearbyint(z.real());
  if (n <= 0.0 && std::abs(z - Complex(n, 0.0)) < kPoleRadius) {
    throw PoleError("Gamma pole at z=" + std::to_string(n));
  }
}

// Lanczos log-gamma, valid for Re z >= 1/2.
Complex lanczos_log_gamma(Complex z) {
  z -= 1.0;
  Complex sum(kLanczosCoeffs[0], 0.0);
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    sum += kLanczosCoeffs[i] / (z + static_cast<double>(i));
  }
  const Complex t = z + (kLanczosG + 0.5);
  return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(sum);
}

// log sin(pi z) on the branch that is analytic in Im z > 0 and real on (0, 1);
// Im z = 0 is taken as the limit from above.
Complex log_sin_pi_upper(Complex z) {
  const Complex i(0.0, 1.0);
  const Complex q = std::exp(2.0 * kPi * i * z);
  return -i * kPi * z + Complex(-kLn2, 0.5 * kPi) + std::log(1.0 - q);
}

}  // namespace

Complex cpow_principal(Complex z, Complex w) {
  if (z.real() < 0.0) {
    throw DomainError("cpow_principal: Re z < 0");
  }
  const double x = z.real() == 0.0 ? 0.0 : z.real();
  const double y = z.imag();
  if (x == 0.0 && y == 0.0) {
    if (w.real() > 0.0) return {0.0, 0.0};
    throw DomainError("cpow_principal: z = 0 with Re w <= 0");
  }
  if (y == 0.0 && w.imag() == 0.0) {
    return {std::pow(x, w.real()), 0.0};
  }
  const double log_mod = std::log(std::hypot(x, y));
  const double arg = std::atan2(y, x);
  const double re = w.real() * log_mod - w.imag() * arg;
  const double im = w.real() * arg + w.imag() * log_mod;
  const double mag = std::exp(re);
  return {mag * std::cos(im), mag * std::sin(im)};
}

double sin_pi(double x) {
  double sign = 1.0;
  if (x < 0.0) {
    x = -x;
    sign = -1.0;
  }
  const double r = std::fmod(x, 2.0);
  const double n = std::nearbyint(2.0 * r);
  const double a = kPi * (r - 0.5 * n);
  switch (static_cast<int>(n) % 4) {
    case 0: return sign * std::sin(a);
    case 1: return sign * std::cos(a);
    case 2: return -sign * std::sin(a);
    default: return -sign * std::cos(a);
  }
}

double cos_pi(double x) {
  const double r = std::fmod(std::abs(x), 2.0);
  const double n = std::nearbyint(2.0 * r);
  const double a = kPi * (r - 0.5 * n);
  switch (static_cast<int>(n) % 4) {
    case 0: return std::cos(a);
    case 1: return -std::sin(a);
    case 2: return -std::cos(a);
    default: return std::sin(a);
  }
}

namespace {

void hyperbolic_pair(double y, double& ch, double& sh) {
  if (std::abs(y) > 300.0) {
    throw DomainError("trigonometric kernel: |Im z| > 300");
  }
  ch = std::cosh(kPi * y);
  sh = std::sinh(kPi * y);
  if (!std::isfinite(ch)) {
    throw OverflowError("cosh(pi y) overflows double precision");
  }
}

}  // namespace

Complex sin_pi_z(Complex z) {
  double ch = 0.0;
  double sh = 0.0;
  hyperbolic_pair(z.imag(), ch, sh);
  return {sin_pi(z.real()) * ch, cos_pi(z.real()) * sh};
}

Complex cos_pi_z(Complex z) {
  double ch = 0.0;
  double sh = 0.0;
  hyperbolic_pair(z.imag(), ch, sh);
  return {cos_pi(z.real()) * ch, -sin_pi(z.real()) * sh};
}

double sech_sq_pi(double y) {
  const double e = std::exp(-2.0 * kPi * std::abs(y));
  const double d = 1.0 + e;
  return 4.0 * e / (d * d);
}

double csch_sq_half(double t) {
  if (!(t > 0.0)) {
    throw DomainError("csch_sq_half: t must be > 0");
  }
  if (t < 1e-4) {
    const double t2 = t * t;
    return 4.0 / t2 - 1.0 / 3.0 + t2 / 60.0;
  }
  const double e = std::exp(-t);
  const double d = -std::expm1(-t);
  return 4.0 * e / (d * d);
}

Complex log_gamma(Complex z) {
  check_pole(z);
  if (z.real() >= 0.5) {
    return lanczos_log_gamma(z);
  }
  if (z.imag() < 0.0) {
    return std::conj(log_gamma(std::conj(z)));
  }
  return kLogPi - log_sin_pi_upper(z) - lanczos_log_gamma(1.0 - z);
}

Complex gamma(Complex z) {
  check_pole(z);
  if (z.real() >= 0.5) {
    const Complex lg = lanczos_log_gamma(z);
    if (z.imag() == 0.0) return {std::exp(lg.real()), 0.0};
    return std::exp(lg);
  }
  return kPi / (sin_pi_z(z) * gamma(1.0 - z));
}

}  // namespace czeta
