#include "czeta/oracle.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "czeta/errors.hpp"

namespace czeta::oracle {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

constexpr int kMaxK = 15;

struct BernoulliTable {
  std::array<double, kMaxK + 1> b2k{};
  std::array<double, kMaxK + 1> b2k_over_fact{};
};

BernoulliTable build_table() {
  constexpr int kMaxIndex = 2 * kMaxK;
  // Pascal's triangle up to row kMaxIndex + 1.
  std::vector<std::vector<cpp_int>> binom(kMaxIndex + 2);
  for (int m = 0; m <= kMaxIndex + 1; ++m) {
    binom[m].assign(m + 1, cpp_int(1));
    for (int j = 1; j < m; ++j) binom[m][j] = binom[m - 1][j - 1] + binom[m - 1][j];
  }
  std::vector<cpp_rational> b(kMaxIndex + 1);
  b[0] = 1;
  for (int m = 1; m <= kMaxIndex; ++m) {
    cpp_rational acc = 0;
    for (int j = 0; j < m; ++j) acc += cpp_rational(binom[m + 1][j]) * b[j];
    b[m] = -acc / cpp_rational(binom[m + 1][m]);
  }
  BernoulliTable table;
  cpp_int factorial = 1;
  for (int k = 1; k <= kMaxK; ++k) {
    factorial *= (2 * k - 1) * (2 * k);
    table.b2k[k] = b[2 * k].convert_to<double>();
    table.b2k_over_fact[k] = (b[2 * k] / cpp_rational(factorial)).convert_to<double>();
  }
  return table;
}

const BernoulliTable& table() {
  static const BernoulliTable t = build_table();
  return t;
}

void check_k(int k) {
  if (k < 1 || k > kMaxK) {
    throw DomainError("bernoulli_even: k must be in [1, 15]");
  }
}

Complex npow(long n, Complex w) { return cpow_principal(Complex(static_cast<double>(n), 0.0), w); }

constexpr double kRoundingAllowance = 8.0 * std::numeric_limits<double>::epsilon();

}  // namespace

double bernoulli_even(int k) {
  check_k(k);
  return table().b2k[k];
}

double bernoulli_even_over_factorial(int k) {
  check_k(k);
  return table().b2k_over_fact[k];
}

EulerMaclaurinParams EulerMaclaurinParams::defaults_for(Complex s) {
  EulerMaclaurinParams p;
  p.cutoff = 25 + static_cast<int>(std::ceil(std::abs(s.imag())));
  p.corrections = 12;
  return p;
}

OracleValue zeta_euler_maclaurin(Complex s, const EulerMaclaurinParams& params) {
  const int n_cut = params.cutoff;
  const int m = params.corrections;
  if (n_cut < 2 || m < 1 || m > kMaxK) {
    throw DomainError("zeta_euler_maclaurin: need N >= 2 and 1 <= M <= 15");
  }
  if (std::abs(s - 1.0) < 1e-9) {
    throw PoleAtOne();
  }
  if (!(s.real() > -2.0 * m)) {
    throw DomainError("zeta_euler_maclaurin: requires Re s > -2M");
  }
  if (std::abs(s.imag()) > 60.0) {
    throw DomainError("zeta_euler_maclaurin: |Im s| > 60");
  }

  Complex head;
  double magnitude = 0.0;
  for (long n = n_cut - 1; n >= 1; --n) {
    const Complex term = npow(n, -s);
    head += term;
    magnitude += std::abs(term);
  }
  const double big_n = static_cast<double>(n_cut);
  const Complex n_pow = npow(n_cut, -s);
  const Complex integral_term = big_n * n_pow / (s - 1.0);
  const Complex half_term = 0.5 * n_pow;
  magnitude += std::abs(integral_term) + std::abs(half_term);

  // term_k = B_{2k}/(2k)! * s (s+1) ... (s+2k-2) * N^{-s-2k+1}
  Complex rising = s;                   // s (s+1) ... (s+2k-2)
  Complex power = n_pow / big_n;        // N^{-s-2k+1}
  Complex corrections;
  const double inv_n2 = 1.0 / (big_n * big_n);
  for (int k = 1; k <= m; ++k) {
    const Complex term = bernoulli_even_over_factorial(k) * rising * power;
    corrections += term;
    magnitude += std::abs(term);
    rising *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
    power *= inv_n2;
  }

  double omitted;
  if (m < kMaxK) {
    omitted = std::abs(bernoulli_even_over_factorial(m + 1) * rising * power);
  } else {
    // |B_{2k}| / (2k)! ~ 2 / (2 pi)^{2k}
    omitted = 2.0 / std::pow(2.0 * kPi, 2.0 * (m + 1)) * std::abs(rising * power);
  }
  const double envelope = std::abs(s + (2.0 * m + 1.0)) / (s.real() + 2.0 * m + 1.0);

  OracleValue out;
  out.value = head + integral_term + half_term + corrections;
  // Each n^{-s} carries a phase error of about |s| log N ulps.
  const double phase_ulps = 1.0 + std::abs(s) * std::log(big_n);
  out.err_bound = omitted * envelope + kRoundingAllowance * phase_ulps * magnitude;
  return out;
}

OracleValue zeta_euler_maclaurin(Complex s) {
  return zeta_euler_maclaurin(s, EulerMaclaurinParams::defaults_for(s));
}

OracleValue dirichlet_partial(Complex s, long n_terms) {
  if (!(s.real() > 1.0)) {
    throw DomainError("dirichlet_partial: requires Re s > 1");
  }
  if (n_terms < 1) {
    throw DomainError("dirichlet_partial: N must be >= 1");
  }
  OracleValue out;
  for (long n = n_terms; n >= 1; --n) out.value += npow(n, -s);
  out.err_bound = std::pow(static_cast<double>(n_terms), 1.0 - s.real()) / (s.real() - 1.0);
  return out;
}

}  // namespace czeta::oracle
