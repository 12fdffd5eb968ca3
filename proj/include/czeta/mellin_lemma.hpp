#pragma once

#include "czeta/complex_core.hpp"
#include "czeta/quadrature.hpp"

// Three Mellin-type integrals that each equal Gamma(s) zeta(s) for Re s > 1:
//
//   bose       int_0^inf t^{s-1} / (e^t - 1) dt
//   exp_sq     (1/s)  int_0^inf e^t t^s / (e^t - 1)^2 dt
//   sinh_form  (1/4s) int_0^inf t^s / sinh^2(t/2) dt
//
// Each is computed independently by integrate_mellin. Complex s is accepted;
// the identities continue analytically off the real axis.

namespace czeta {

/// Kernels, stable for all t > 0. Above t = 1 they are rewritten in e^{-t}.
double bose_kernel(double t);      // 1 / (e^t - 1)
double exp_sq_kernel(double t);    // e^t / (e^t - 1)^2

/// Throw DomainError unless Re s > 1.05.
QuadratureResult bose_integral(Complex s, const QuadraturePlan& plan = {});
QuadratureResult exp_sq_integral(Complex s, const QuadraturePlan& plan = {});
QuadratureResult sinh_integral(Complex s, const QuadraturePlan& plan = {});

/// int_0^inf e^{-n t} t^{s-1} dt by quadrature; equals Gamma(s) / n^s.
QuadratureResult exponential_moment(long n, Complex s, const QuadraturePlan& plan = {});

struct LemmaReport {
  Complex s;
  Complex bose;
  Complex exp_sq;
  Complex sinh_form;
  Complex reference;  // Gamma(s) zeta(s) from complex_core and the Euler-Maclaurin oracle
  double max_abs_deviation = 0.0;
  double err_sum = 0.0;  // sum of the three quadrature error estimates
  bool complex_extension = false;  // Im s != 0
};

LemmaReport lemma_check(Complex s, const QuadraturePlan& plan = {});

}  // namespace czeta
