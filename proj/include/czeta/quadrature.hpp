#pragma once

#include <functional>
#include <span>
#include <vector>

#include "czeta/complex_core.hpp"

namespace czeta {

using Integrand = std::function<Complex(double)>;

/// Parameters of the composite Gauss-Legendre rule.
///
/// Convergence is declared once |I(h) - I(h/2)| <= max(target_tol, rel_tol * |I(h/2)|).
/// rel_tol = 0 gives a purely absolute tolerance. Truncated tails must fit
/// within tail_fraction * target_tol.
struct QuadraturePlan {
  int nodes_per_panel = 16;
  double panel_width = 0.5;
  int max_refinements = 8;
  double target_tol = 1e-12;
  double rel_tol = 0.0;
  double tail_fraction = 0.1;

  /// Throws DomainError unless nodes in [2, 64], width > 0, refinements >= 1,
  /// target_tol >= 1e-14, rel_tol >= 0 and tail_fraction in (0, 0.1].
  void validate() const;
  double tolerance_for(Complex value) const;
};

struct QuadratureResult {
  Complex value;
  double err_est = 0.0;
  long n_evals = 0;
  bool converged = false;
  /// Integration window actually used (in the integration variable; for
  /// integrate_mellin these are the cuts in u = log t).
  double lower = 0.0;
  double upper = 0.0;
};

struct GaussLegendreRule {
  std::vector<double> nodes;    // strictly increasing on (-1, 1)
  std::vector<double> weights;  // positive, sum to 2
};

/// n-point Gauss-Legendre rule on [-1, 1], 1 <= n <= 64. Rules are built once
/// and shared; the returned reference stays valid for the program lifetime.
const GaussLegendreRule& gauss_legendre_rule(int n);

/// Composite Gauss-Legendre over [a, b] with uniform panels of about
/// plan.panel_width, halving the panels until the difference between
/// successive levels meets the tolerance. Panels are summed left to right so
/// results are bitwise reproducible.
///
/// Throws NonFiniteIntegrand if f returns NaN or infinity.
QuadratureResult integrate_interval(const Integrand& f, double a, double b,
                                    const QuadraturePlan& plan);

/// Tail envelope |f(y)| <= constant * (1 + |y|)^growth_bound * exp(-decay_rate |y|).
struct DecayBound {
  double decay_rate = 1.0;
  double growth_bound = 0.0;
  double constant = 1.0;

  /// Bound on the integral of the envelope beyond height y (one side).
  double tail(double y) const;
};

/// Integral over the whole real line. The truncation height Y is the smallest
/// grid value (step 1/64) with bound.tail(Y) <= target_tol / 10; the interior
/// [-Y, Y] is integrated as [0, Y] of f(y) + f(-y). The reported err_est
/// includes both tail bounds. upper = Y, lower = -Y.
///
/// Throws TruncationFailure when no Y <= 500 works.
QuadratureResult integrate_line_decaying(const Integrand& f, const DecayBound& bound,
                                         const QuadraturePlan& plan);

/// Integral over (0, inf) of f(t) with f ~ c t^alpha at 0 and exponential decay
/// at rate decay_rate at infinity, computed as the integral over the real line
/// of g(u) = f(e^u) e^u. alpha may be complex (t^{s-2} kernels at complex s);
/// only Re alpha enters integrability.
///
/// The left cut L is taken once |g(L)|/(Re alpha+1) <= target_tol / 10; deep in
/// the power-law regime (L <= -8) the leading-order tail g(L)/(alpha+1) is
/// added instead, with its first-order remainder as the error. The right cut R
/// is taken once |f(e^R)|/decay_rate <= target_tol / 10 at two consecutive grid
/// points.
///
/// Throws DomainError if Re alpha <= -1, TruncationFailure if a cut would exceed
/// 500 in |u|.
QuadratureResult integrate_mellin(const Integrand& f, Complex alpha, double decay_rate,
                                  const QuadraturePlan& plan);

}  // namespace czeta
