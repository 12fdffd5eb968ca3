#pragma once

#include <optional>
#include <string_view>

#include "czeta/complex_core.hpp"
#include "czeta/quadrature.hpp"

namespace czeta {

/// Default plan for contour evaluations: the stock plan plus a 1e-13 relative
/// floor, since |E(s)| grows quickly for Re s < 0, and tails cut at 1e-4 of
/// the tolerance. The kernel decays like e^{-2 pi |y|}, so the tighter cut
/// costs about one panel and leaves E(0), E(1) exact to the last bit.
QuadraturePlan default_contour_plan();

/// Vertical contour Re z = sigma + shift, sigma in (0, 1).
///
/// shift counts the poles z = 1, ..., shift that the line has been moved
/// across; their residues are added back explicitly. When unset, the shift is
/// floor(|Im s| / pi), which keeps the integrand free of the e^{pi |Im s| / 2}
/// cancellation on the unshifted line. shift = 0 is the literal line between
/// 0 and 1.
struct ContourSpec {
  double sigma = 0.5;
  QuadraturePlan plan = default_contour_plan();
  std::optional<int> shift;

  void validate() const;
  int shift_for(Complex s) const;
};

enum class Method { line, axis, residue_sum, oracle };

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

struct EvalResult {
  Complex value;
  double err_est = 0.0;
  Method method = Method::line;
  double truncation_height = 0.0;
  long n_evals = 0;
  bool converged = true;
  int shift = 0;
};

/// pi^2 z^{1-s} / sin^2(pi z) at z = sigma + i y, sigma in (0, 1). For
/// sigma = 1/2 the denominator is cosh^2(pi y) and the reduced kernel
/// pi^2 z^{1-s} sech^2(pi y) is used.
Complex ball_integrand_line(double y, Complex s, double sigma);

/// Same integrand on Re z = abscissa for any positive non-integer abscissa.
/// Half-integer abscissae use the reduced kernel.
Complex ball_integrand(double y, Complex s, double abscissa);

/// E(s) = (s - 1) zeta(s) from the vertical-line contour integral
/// (1/2pi) * integral of ball_integrand over y, plus the residue terms of any
/// poles the line was shifted across. Valid for every s with |Im s| <= 60.
EvalResult entire_e_line(Complex s, const ContourSpec& spec = {});

/// E(s) for Re s <= -0.05 from the contour moved onto the imaginary axis:
/// -pi sin(pi s / 2) * integral_0^inf y^{1-s} / sinh^2(pi y) dy.
/// plan.target_tol applies to E, not to the bare integral.
EvalResult entire_e_axis(Complex s, const QuadraturePlan& plan = default_contour_plan());

/// Residue of pi^2 z^{1-s} / sin^2(pi z) at z = n: (1 - s) n^{-s}.
Complex residue_at(long n, Complex s);

struct PartialSum {
  Complex value;
  double tail_bound = 0.0;
};

/// -sum_{n=1}^{N} residue_at(n, s) = (s - 1) sum_{n<=N} n^{-s}, for Re s > 1,
/// with the integral-comparison tail bound |s - 1| N^{1 - Re s} / (Re s - 1).
PartialSum residue_partial_sum(Complex s, long n_terms);

/// zeta(s) = E(s) / (s - 1). Throws PoleAtOne when |s - 1| < 1e-6.
EvalResult zeta(Complex s, const ContourSpec& spec = {});

/// Divides an E(s) result by (s - 1), scaling the error estimate. Throws
/// PoleAtOne inside the guard disk. zeta() is exactly this applied to
/// entire_e_line.
EvalResult zeta_from_entire(EvalResult entire, Complex s);

/// True when s lies inside the guard disk |s - 1| < 1e-6.
bool in_pole_guard(Complex s);

}  // namespace czeta
