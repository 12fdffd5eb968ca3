#include "czeta/contour.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "czeta/errors.hpp"

namespace czeta {

namespace {

constexpr double kImContractBox = 60.0;
constexpr double kPoleGuard = 1e-6;
constexpr double kAxisGuard = -0.05;

// 1/|sin(pi z)|^2 <= kSinEnvelope * e^{-2 pi |y|} for |y| >= 1 on any line, and
// for every y on half-integer lines (where the constant is 4).
const double kSinEnvelope = 4.0 / std::pow(-std::expm1(-2.0 * kPi), 2);

bool is_half_integer(double x) { return x - std::floor(x) == 0.5; }

Complex sum_residue_terms(Complex s, long n_terms) {
  // Smallest terms first.
  Complex acc;
  for (long n = n_terms; n >= 1; --n) {
    acc += cpow_principal(Complex(static_cast<double>(n), 0.0), -s);
  }
  return (s - 1.0) * acc;
}

}  // namespace

QuadraturePlan default_contour_plan() {
  QuadraturePlan plan;
  plan.rel_tol = 1e-13;
  plan.tail_fraction = 1e-4;
  return plan;
}

void ContourSpec::validate() const {
  if (!(sigma > 0.0 && sigma < 1.0)) {
    throw DomainError("ContourSpec: sigma must lie strictly between 0 and 1");
  }
  if (shift && *shift < 0) {
    throw DomainError("ContourSpec: shift must be >= 0");
  }
  plan.validate();
}

int ContourSpec::shift_for(Complex s) const {
  if (shift) return *shift;
  return static_cast<int>(std::floor(std::abs(s.imag()) / kPi));
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::line: return "line";
    case Method::axis: return "axis";
    case Method::residue_sum: return "residue_sum";
    case Method::oracle: return "oracle";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : {Method::line, Method::axis, Method::residue_sum, Method::oracle}) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

Complex ball_integrand(double y, Complex s, double abscissa) {
  if (!(abscissa > 0.0) || abscissa == std::floor(abscissa)) {
    throw DomainError("ball_integrand: abscissa must be a positive non-integer");
  }
  const Complex z(abscissa, y);
  const Complex power = cpow_principal(z, 1.0 - s);
  if (is_half_integer(abscissa)) {
    return (kPi * kPi * sech_sq_pi(y)) * power;
  }
  const Complex sine = sin_pi_z(z);
  return kPi * kPi * power / (sine * sine);
}

Complex ball_integrand_line(double y, Complex s, double sigma) {
  if (!(sigma > 0.0 && sigma < 1.0)) {
    throw DomainError("ball_integrand_line: sigma must lie in (0, 1)");
  }
  return ball_integrand(y, s, sigma);
}

EvalResult entire_e_line(Complex s, const ContourSpec& spec) {
  spec.validate();
  if (std::abs(s.imag()) > kImContractBox) {
    throw ContractViolation("entire_e_line: |Im s| > 60");
  }
  const int shift = spec.shift_for(s);
  const double abscissa = spec.sigma + shift;

  DecayBound bound;
  bound.decay_rate = 2.0 * kPi;
  const double p = 1.0 - s.real();
  double modulus_factor = 1.0;
  if (p >= 0.0) {
    bound.growth_bound = p;
    modulus_factor = std::pow(std::max(1.0, abscissa), p);
  } else {
    modulus_factor = std::pow(abscissa, p);
  }
  // pi^2 / (2 pi) * kernel envelope * |z|^{1 - Re s} * e^{|Im s| pi / 2}
  bound.constant = 0.5 * kPi * kSinEnvelope * modulus_factor *
                   std::exp(0.5 * kPi * std::abs(s.imag()));

  const Integrand f = [s, abscissa](double y) {
    return ball_integrand(y, s, abscissa) / (2.0 * kPi);
  };
  const QuadratureResult q = integrate_line_decaying(f, bound, spec.plan);

  EvalResult out;
  out.method = Method::line;
  out.value = q.value;
  out.err_est = q.err_est;
  out.truncation_height = q.upper;
  out.n_evals = q.n_evals;
  out.converged = q.converged;
  out.shift = shift;
  if (shift > 0) {
    out.value += sum_residue_terms(s, shift);
    out.n_evals += shift;
  }
  return out;
}

EvalResult entire_e_axis(Complex s, const QuadraturePlan& plan) {
  if (s.real() > kAxisGuard) {
    throw DomainError("entire_e_axis: requires Re s <= -0.05");
  }
  if (std::abs(s.imag()) > kImContractBox) {
    throw ContractViolation("entire_e_axis: |Im s| > 60");
  }
  plan.validate();
  const Complex prefactor = -kPi * sin_pi_z(0.5 * s);
  const double scale = std::abs(prefactor);

  QuadraturePlan inner = plan;
  if (scale > 0.0) {
    inner.target_tol = std::max(1e-14, plan.target_tol / scale);
  }
  const Integrand f = [s](double y) {
    return cpow_principal(Complex(y, 0.0), 1.0 - s) * csch_sq_half(2.0 * kPi * y);
  };
  const QuadratureResult q = integrate_mellin(f, -1.0 - s, 2.0 * kPi, inner);

  EvalResult out;
  out.method = Method::axis;
  out.value = prefactor * q.value;
  out.err_est = scale * q.err_est;
  out.truncation_height = std::exp(q.upper);
  out.n_evals = q.n_evals;
  out.converged = q.converged;
  return out;
}

Complex residue_at(long n, Complex s) {
  if (n < 1) {
    throw DomainError("residue_at: n must be >= 1");
  }
  return (1.0 - s) * cpow_principal(Complex(static_cast<double>(n), 0.0), -s);
}

PartialSum residue_partial_sum(Complex s, long n_terms) {
  if (!(s.real() > 1.0)) {
    throw DomainError("residue_partial_sum: requires Re s > 1");
  }
  if (n_terms < 1) {
    throw DomainError("residue_partial_sum: N must be >= 1");
  }
  PartialSum out;
  out.value = sum_residue_terms(s, n_terms);
  out.tail_bound = std::abs(s - 1.0) * std::pow(static_cast<double>(n_terms), 1.0 - s.real()) /
                   (s.real() - 1.0);
  return out;
}

bool in_pole_guard(Complex s) { return std::abs(s - 1.0) < kPoleGuard; }

EvalResult zeta_from_entire(EvalResult entire, Complex s) {
  if (in_pole_guard(s)) {
    throw PoleAtOne();
  }
  const Complex denom = s - 1.0;
  entire.value /= denom;
  entire.err_est /= std::abs(denom);
  return entire;
}

EvalResult zeta(Complex s, const ContourSpec& spec) {
  if (in_pole_guard(s)) {
    throw PoleAtOne();
  }
  return zeta_from_entire(entire_e_line(s, spec), s);
}

}  // namespace czeta
