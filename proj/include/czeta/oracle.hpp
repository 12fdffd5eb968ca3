#pragma once

#include "czeta/complex_core.hpp"

// Reference evaluators that share nothing with the contour code beyond
// complex_core. Everything the contour evaluator is checked against comes
// from here.

namespace czeta::oracle {

/// Even Bernoulli number B_{2k}, 1 <= k <= 15. The table comes from the
/// recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0 in exact rational arithmetic and
/// is rounded once.
double bernoulli_even(int k);

/// B_{2k} / (2k)!, rounded once from the exact rational.
double bernoulli_even_over_factorial(int k);

struct EulerMaclaurinParams {
  int cutoff = 25;       // N: direct sum over n < N
  int corrections = 12;  // M: Bernoulli terms, <= 15

  /// N = 25 + ceil(|Im s|), M = 12.
  static EulerMaclaurinParams defaults_for(Complex s);
};

struct OracleValue {
  Complex value;
  double err_bound = 0.0;
};

/// Euler-Maclaurin continuation of zeta.
/// err_bound is the first omitted correction times |s+2M+1| / (Re s + 2M + 1),
/// plus a rounding allowance proportional to the magnitudes summed.
/// Throws PoleAtOne for |s - 1| < 1e-9, DomainError for Re s <= -2M or
/// |Im s| > 60.
OracleValue zeta_euler_maclaurin(Complex s, const EulerMaclaurinParams& params);
OracleValue zeta_euler_maclaurin(Complex s);

/// sum_{n=1}^{N} n^{-s} for Re s > 1 with tail bound N^{1 - Re s} / (Re s - 1).
OracleValue dirichlet_partial(Complex s, long n_terms);

}  // namespace czeta::oracle
