#include "czeta/functional_equation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "czeta/errors.hpp"

namespace czeta {

namespace {

constexpr double kSingularRadius = 1e-6;
constexpr double kCheckGuard = 1e-3;

// Removable-limit evaluation: mean of an analytic function over a circle.
constexpr double kLimitRadius = 0.05;
constexpr int kLimitPoints = 16;

double dist_positive_even(Complex s) {
  const double k = std::max(1.0, std::nearbyint(0.5 * s.real()));
  return std::abs(s - Complex(2.0 * k, 0.0));
}

double dist_odd(Complex s) {
  const double k = std::nearbyint(0.5 * (s.real() - 1.0));
  return std::abs(s - Complex(2.0 * k + 1.0, 0.0));
}

double dist_positive_integer(Complex s) {
  const double n = std::max(1.0, std::nearbyint(s.real()));
  return std::abs(s - Complex(n, 0.0));
}

double dist_nonpositive_integer(Complex s) {
  const double n = std::min(0.0, std::nearbyint(s.real()));
  return std::abs(s - Complex(n, 0.0));
}

// Gamma(1-s) has poles at the positive integers.
double sine_form_singular_distance(Complex s) { return dist_positive_integer(s); }

// cos(pi s/2) vanishes at odd integers; Gamma(s) has poles at 0, -1, -2, ...
double cosine_form_singular_distance(Complex s) {
  return std::min(dist_odd(s), dist_nonpositive_integer(s));
}

bool near_positive_odd(Complex s, double radius) {
  return s.real() > 0.0 && dist_odd(s) < radius;
}

}  // namespace

std::string_view form_name(ChiForm f) {
  switch (f) {
    case ChiForm::automatic: return "auto";
    case ChiForm::sine: return "sine";
    case ChiForm::cosine: return "cosine";
  }
  return "unknown";
}

ChiForm select_chi_form(Complex s) {
  return dist_positive_even(s) > dist_odd(s) ? ChiForm::sine : ChiForm::cosine;
}

Complex chi_sine(Complex s) {
  const Complex two_pi(2.0 * kPi, 0.0);
  return 2.0 * cpow_principal(two_pi, s - 1.0) * sin_pi_z(0.5 * s) * gamma(1.0 - s);
}

Complex chi_cosine(Complex s) {
  const Complex two_pi(2.0 * kPi, 0.0);
  return cpow_principal(two_pi, s) / (2.0 * gamma(s) * cos_pi_z(0.5 * s));
}

ChiValue chi(Complex s, ChiForm form) {
  ChiValue out;
  out.form = form == ChiForm::automatic ? select_chi_form(s) : form;
  const double dist = out.form == ChiForm::sine ? sine_form_singular_distance(s)
                                                 : cosine_form_singular_distance(s);
  if (dist < kSingularRadius) {
    throw RemovableSingularity("chi: " + std::string(form_name(out.form)) +
                               " form is singular at this point");
  }
  out.value = out.form == ChiForm::sine ? chi_sine(s) : chi_cosine(s);
  return out;
}

ZetaEvaluator contour_zeta_evaluator(const ContourSpec& spec) {
  return [spec](Complex w) { return zeta(w, spec).value; };
}

FeqRhs feq_rhs(Complex s, const ZetaEvaluator& zeta_fn, ChiForm form) {
  if (std::abs(s) < kSingularRadius) {
    throw IndeterminatePoint("feq_rhs: s = 0 is 0 * inf on the right-hand side");
  }
  if (std::abs(s - 1.0) < kSingularRadius) {
    throw PoleAtOne();
  }
  FeqRhs out;
  if (form == ChiForm::automatic && near_positive_odd(s, kSingularRadius)) {
    // chi has a simple pole here and zeta(1 - s) a trivial zero; their product
    // is analytic, so its value is the mean over a small circle.
    Complex acc;
    for (int k = 0; k < kLimitPoints; ++k) {
      const double theta = 2.0 * kPi * (k + 0.5) / kLimitPoints;
      const Complex point = s + kLimitRadius * Complex(std::cos(theta), std::sin(theta));
      const ChiValue c = chi(point);
      if (k == 0) out.form = c.form;
      acc += c.value * zeta_fn(1.0 - point);
    }
    out.value = acc / static_cast<double>(kLimitPoints);
    out.removable_limit = true;
    return out;
  }
  const ChiValue c = chi(s, form);
  out.form = c.form;
  out.value = c.value * zeta_fn(1.0 - s);
  return out;
}

FeqReport feq_check(Complex s, const ContourSpec& spec, ChiForm form) {
  if (std::abs(s) < kCheckGuard || std::abs(s - 1.0) < kCheckGuard) {
    throw DomainError("feq_check: s inside the guard disk around 0 or 1");
  }
  FeqReport report;
  report.s = s;
  report.lhs = zeta(s, spec).value;
  const FeqRhs rhs = feq_rhs(s, contour_zeta_evaluator(spec), form);
  report.rhs = rhs.value;
  report.form = rhs.form;
  report.removable_limit = rhs.removable_limit;
  report.abs_residual = std::abs(report.lhs - report.rhs);
  report.rel_residual = report.abs_residual / (1.0 + std::abs(report.lhs));
  return report;
}

}  // namespace czeta
