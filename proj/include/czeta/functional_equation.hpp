#pragma once

// The multiplier chi(s) = 2 (2pi)^{s-1} sin(pi s/2) Gamma(1-s) with
// zeta(s) = chi(s) zeta(1-s), and a numerical check of that identity using
// only the contour evaluator.
//
// Two algebraically equal forms are used. Euler's reflection
// Gamma(1-s) Gamma(s) = pi / sin(pi s) together with sin(pi s) =
// 2 sin(pi s/2) cos(pi s/2) gives
//
//   2 (2pi)^{s-1} sin(pi s/2) Gamma(1-s)
//     = 2 (2pi)^{s-1} sin(pi s/2) pi / (Gamma(s) 2 sin(pi s/2) cos(pi s/2))
//     = (2pi)^s / (2 Gamma(s) cos(pi s/2)).
//
// The sine form is 0 * inf at the positive even integers; the cosine form is
// singular at the odd integers instead. Whichever form is further from its
// own singular set is used.

#include <functional>
#include <string_view>

#include "czeta/complex_core.hpp"
#include "czeta/contour.hpp"

namespace czeta {

enum class ChiForm { automatic, sine, cosine };

std::string_view form_name(ChiForm f);

struct ChiValue {
  Complex value;
  ChiForm form = ChiForm::sine;
};

/// Distance-based choice: sine form when dist(s, {2,4,6,...}) > dist(s, odd integers).
ChiForm select_chi_form(Complex s);

Complex chi_sine(Complex s);
Complex chi_cosine(Complex s);

/// chi(s) in the requested form (automatic selects by distance).
/// Throws RemovableSingularity when the chosen form is within 1e-6 of its
/// singular set; in automatic mode that only happens near positive odd
/// integers, where chi has a genuine pole.
ChiValue chi(Complex s, ChiForm form = ChiForm::automatic);

using ZetaEvaluator = std::function<Complex(Complex)>;

/// The contour evaluator with the default spec.
ZetaEvaluator contour_zeta_evaluator(const ContourSpec& spec = {});

struct FeqRhs {
  Complex value;
  ChiForm form = ChiForm::sine;
  /// True when s sat on a pole of chi (positive odd integer) and the value is
  /// the removable limit of chi(s) zeta(1-s), taken as the mean over a circle.
  bool removable_limit = false;
};

/// chi(s) * zeta_fn(1 - s). At a positive odd integer, where chi has a pole
/// and zeta(1 - s) a trivial zero, the product's limit is returned.
/// Throws IndeterminatePoint within 1e-6 of s = 0.
FeqRhs feq_rhs(Complex s, const ZetaEvaluator& zeta_fn, ChiForm form = ChiForm::automatic);

struct FeqReport {
  Complex s;
  Complex lhs;
  Complex rhs;
  double abs_residual = 0.0;
  double rel_residual = 0.0;  // abs_residual / (1 + |lhs|)
  ChiForm form = ChiForm::sine;
  bool removable_limit = false;
};

/// Both sides from the contour evaluator. Throws DomainError inside the guard
/// disks |s| < 1e-3 and |s - 1| < 1e-3.
FeqReport feq_check(Complex s, const ContourSpec& spec = {}, ChiForm form = ChiForm::automatic);

}  // namespace czeta
