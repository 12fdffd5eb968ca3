#include "czeta/mellin_lemma.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "czeta/errors.hpp"
#include "czeta/oracle.hpp"

namespace czeta {

namespace {

constexpr double kConditioningGuard = 1.05;

void check_domain(Complex s, const char* who) {
  if (!(s.real() > kConditioningGuard)) {
    throw DomainError(std::string(who) + ": requires Re s > 1.05");
  }
}

Complex tpow(double t, Complex w) { return cpow_principal(Complex(t, 0.0), w); }

QuadratureResult scaled(QuadratureResult r, Complex factor) {
  r.value *= factor;
  r.err_est *= std::abs(factor);
  return r;
}

}  // namespace

double bose_kernel(double t) {
  if (t < 1.0) return 1.0 / std::expm1(t);
  return std::exp(-t) / -std::expm1(-t);
}

double exp_sq_kernel(double t) {
  if (t < 1.0) {
    const double d = std::expm1(t);
    return std::exp(t) / (d * d);
  }
  const double d = std::expm1(-t);
  return std::exp(-t) / (d * d);
}

QuadratureResult bose_integral(Complex s, const QuadraturePlan& plan) {
  check_domain(s, "bose_integral");
  const Integrand f = [s](double t) { return tpow(t, s - 1.0) * bose_kernel(t); };
  return integrate_mellin(f, s - 2.0, 1.0, plan);
}

QuadratureResult exp_sq_integral(Complex s, const QuadraturePlan& plan) {
  check_domain(s, "exp_sq_integral");
  const Integrand f = [s](double t) { return tpow(t, s) * exp_sq_kernel(t); };
  return scaled(integrate_mellin(f, s - 2.0, 1.0, plan), 1.0 / s);
}

QuadratureResult sinh_integral(Complex s, const QuadraturePlan& plan) {
  check_domain(s, "sinh_integral");
  const Integrand f = [s](double t) { return tpow(t, s) * csch_sq_half(t); };
  return scaled(integrate_mellin(f, s - 2.0, 1.0, plan), 1.0 / (4.0 * s));
}

QuadratureResult exponential_moment(long n, Complex s, const QuadraturePlan& plan) {
  if (n < 1) throw DomainError("exponential_moment: n must be >= 1");
  if (!(s.real() > 0.0)) throw DomainError("exponential_moment: requires Re s > 0");
  const double rate = static_cast<double>(n);
  const Integrand f = [s, rate](double t) { return tpow(t, s - 1.0) * std::exp(-rate * t); };
  return integrate_mellin(f, s - 1.0, rate, plan);
}

LemmaReport lemma_check(Complex s, const QuadraturePlan& plan) {
  check_domain(s, "lemma_check");
  const QuadratureResult bose = bose_integral(s, plan);
  const QuadratureResult exp_sq = exp_sq_integral(s, plan);
  const QuadratureResult sinh_form = sinh_integral(s, plan);

  LemmaReport report;
  report.s = s;
  report.bose = bose.value;
  report.exp_sq = exp_sq.value;
  report.sinh_form = sinh_form.value;
  report.reference = gamma(s) * oracle::zeta_euler_maclaurin(s).value;
  report.max_abs_deviation = std::max({std::abs(report.bose - report.reference),
                                       std::abs(report.exp_sq - report.reference),
                                       std::abs(report.sinh_form - report.reference)});
  report.err_sum = bose.err_est + exp_sq.err_est + sinh_form.err_est;
  report.complex_extension = s.imag() != 0.0;
  return report;
}

}  // namespace czeta
