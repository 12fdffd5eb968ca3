#include "czeta/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <sstream>
#include <vector>

#include "czeta/contour.hpp"
#include "czeta/errors.hpp"
#include "czeta/functional_equation.hpp"
#include "czeta/mellin_lemma.hpp"
#include "czeta/oracle.hpp"
#include "czeta/scan.hpp"

namespace czeta::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

ContourSpec literal_line() {
  ContourSpec spec;
  spec.shift = 0;
  return spec;
}

Outcome exact_points() {
  Outcome out{1, "exact points of the line contour", true, {}};
  const ContourSpec spec = literal_line();
  double worst = 0.0;
  bool fast = true;
  for (const auto& [s, expected] : {std::pair{Complex(1.0, 0.0), 1.0}, {Complex(0.0, 0.0), 0.5}}) {
    const auto start = Clock::now();
    const EvalResult r = entire_e_line(s, spec);
    fast = fast && elapsed_ms(start) < 50.0;
    worst = std::max(worst, std::abs(r.value - expected));
  }
  out.passed = worst < 1e-12 && fast;
  out.detail = "max |E - exact| = " + sci(worst) + (fast ? "" : "; runtime above 50 ms");
  return out;
}

Outcome residue_identity() {
  Outcome out{2, "residue identity", true, {}};
  const ContourSpec spec = literal_line();
  double worst_excess = -1.0;
  for (Complex s : {Complex(2.0, 0.0), Complex(3.0, 0.0), Complex(2.5, 2.0)}) {
    const EvalResult line = entire_e_line(s, spec);
    const PartialSum sum = residue_partial_sum(s, 10'000);
    const double excess = std::abs(line.value - sum.value) - sum.tail_bound;
    worst_excess = std::max(worst_excess, excess);
    out.passed = out.passed && excess <= 1e-10;
  }
  out.detail = "max (|E - partial| - tail_bound) = " + sci(worst_excess);
  return out;
}

Outcome contour_shift() {
  Outcome out{3, "line and imaginary-axis contours agree", true, {}};
  const ContourSpec spec = literal_line();
  double worst = 0.0;
  for (Complex s : {Complex(-0.5, 0.0), Complex(-1.0, 0.0), Complex(-2.5, 0.0), Complex(-3.0, 2.0),
                    Complex(-5.0, 5.0)}) {
    const double dev = std::abs(entire_e_line(s, spec).value - entire_e_axis(s).value);
    worst = std::max(worst, dev);
  }
  out.passed = worst < 1e-9;
  out.detail = "max |E_line - E_axis| = " + sci(worst);
  return out;
}

const std::vector<double> kGridRe = {-5.0, -3.0, -1.5, -0.5, 0.5, 2.0, 3.0, 4.0, 6.0};
const std::vector<double> kGridIm = {0.0, 1.0, 5.0, 10.0, 20.0};

std::vector<Complex> feq_grid() {
  std::vector<Complex> pts;
  for (double im : kGridIm) {
    for (double re : kGridRe) {
      const Complex s(re, im);
      if (std::abs(s) < 1e-3 || std::abs(s - 1.0) < 1e-3) continue;
      pts.push_back(s);
    }
  }
  return pts;
}

Outcome functional_equation_grid() {
  Outcome out{4, "functional equation on the grid", true, {}};
  const auto start = Clock::now();
  double worst = 0.0;
  int count = 0;
  for (Complex s : feq_grid()) {
    worst = std::max(worst, feq_check(s).rel_residual);
    ++count;
  }
  const bool fast = elapsed_ms(start) < 30'000.0;
  out.passed = worst < 1e-8 && fast;
  out.detail = std::to_string(count) + " points, max rel_residual = " + sci(worst) +
               (fast ? "" : "; runtime above 30 s");
  return out;
}

Outcome lemma_values() {
  Outcome out{5, "Mellin integrals equal Gamma(s) zeta(s)", true, {}};
  double worst_real = 0.0;
  double worst_complex = 0.0;
  for (Complex s : {Complex(1.5, 0.0), Complex(2.0, 0.0), Complex(3.0, 0.0), Complex(4.5, 0.0)}) {
    worst_real = std::max(worst_real, lemma_check(s).max_abs_deviation);
  }
  for (Complex s : {Complex(2.0, 1.0), Complex(3.0, 2.0)}) {
    worst_complex = std::max(worst_complex, lemma_check(s).max_abs_deviation);
  }
  out.passed = worst_real < 1e-9 && worst_complex < 1e-8;
  out.detail = "max deviation real s = " + sci(worst_real) + ", complex s = " + sci(worst_complex);
  return out;
}

Outcome trivial_zeros() {
  Outcome out{6, "trivial zeros", true, {}};
  double worst = 0.0;
  for (double x : {-2.0, -4.0, -6.0}) {
    worst = std::max(worst, std::abs(zeta(Complex(x, 0.0)).value));
  }
  out.passed = worst < 1e-10;
  out.detail = "max |zeta(-2k)| = " + sci(worst);
  return out;
}

// Bisection on the sign of one component of the oracle on the critical line.
double bisect_component(const std::function<double(double)>& component, double lo, double hi) {
  double f_lo = component(lo);
  for (int i = 0; i < 200 && hi - lo > 1e-13; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = component(mid);
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

Outcome oracle_agreement() {
  Outcome out{7, "contour agrees with the Euler-Maclaurin oracle in the strip", true, {}};
  std::vector<Complex> pts;
  for (double im : {-30.0, -9.5, 4.25, 27.0}) {
    for (double re : {0.1, 0.3, 0.5, 0.7, 0.9}) pts.emplace_back(re, im);
  }
  double worst = 0.0;
  for (Complex s : pts) {
    worst = std::max(worst, std::abs(zeta(s).value - oracle::zeta_euler_maclaurin(s).value));
  }

  auto on_line = [](double t) { return oracle::zeta_euler_maclaurin(Complex(0.5, t)).value; };
  const double lo = 14.0;
  const double hi = 14.3;
  double min_abs = INFINITY;
  double t_zero = NAN;
  bool bracketed = true;
  for (int part = 0; part < 2; ++part) {
    const std::function<double(double)> component = [&](double t) {
      const Complex v = on_line(t);
      return part == 0 ? v.real() : v.imag();
    };
    if ((component(lo) < 0.0) == (component(hi) < 0.0)) {
      bracketed = false;
      continue;
    }
    const double t = bisect_component(component, lo, hi);
    const double a = std::abs(on_line(t));
    if (a < min_abs) {
      min_abs = a;
      t_zero = t;
    }
  }
  double zero_dev = INFINITY;
  if (std::isfinite(t_zero)) {
    const Complex s(0.5, t_zero);
    zero_dev = std::abs(zeta(s).value - oracle::zeta_euler_maclaurin(s).value);
  }
  out.passed = worst < 1e-10 && bracketed && min_abs < 1e-4 && zero_dev < 1e-10;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", t_zero);
  out.detail = std::to_string(pts.size()) + " points, max |contour - oracle| = " + sci(worst) +
               "; zero at t = " + buf + ", |zeta| = " + sci(min_abs) +
               (bracketed ? "" : "; sign change missing");
  return out;
}

Outcome multiplier_identities() {
  Outcome out{8, "multiplier identities", true, {}};
  const double at_half = std::abs(chi(Complex(0.5, 0.0)).value - 1.0);
  double worst = 0.0;
  int count = 0;
  for (double im : kGridIm) {
    for (double re : kGridRe) {
      const Complex s(re, im);
      if (std::abs(s - std::round(re)) <= 0.1) continue;
      const Complex product = chi(s).value * chi(1.0 - s).value;
      worst = std::max(worst, std::abs(product - 1.0));
      ++count;
    }
  }
  out.passed = at_half < 1e-12 && worst < 1e-10;
  out.detail = "|chi(1/2) - 1| = " + sci(at_half) + ", " + std::to_string(count) +
               " points, max |chi(s) chi(1-s) - 1| = " + sci(worst);
  return out;
}

Outcome determinism() {
  Outcome out{9, "deterministic output", true, {}};
  auto transcript = [] {
    std::string text;
    for (int id = 1; id <= 8; ++id) text += format_outcome(run_criterion(id)) + "\n";
    return text;
  };
  const bool suite_same = transcript() == transcript();

  ScanGrid grid;
  grid.re_min = -2.0;
  grid.re_max = 3.0;
  grid.im_min = 0.0;
  grid.im_max = 25.0;
  grid.steps_re = 100;
  grid.steps_im = 100;
  const ContourSpec spec;
  const std::string serial = scan_csv(grid, spec, 1);
  const std::string threaded = scan_csv(grid, spec, 4);
  const bool scan_same = serial == threaded;

  out.passed = suite_same && scan_same;
  out.detail = std::string("suite transcripts ") + (suite_same ? "identical" : "differ") +
               ", 10000-point scan serial vs 4 threads " + (scan_same ? "identical" : "differ");
  return out;
}

}  // namespace

Outcome run_criterion(int id) {
  using Runner = Outcome (*)();
  static constexpr Runner runners[kCriterionCount] = {
      exact_points,  residue_identity, contour_shift,  functional_equation_grid,
      lemma_values,  trivial_zeros,    oracle_agreement, multiplier_identities,
      determinism};
  if (id < 1 || id > kCriterionCount) {
    throw DomainError("run_criterion: id must be in [1, 9]");
  }
  try {
    return runners[id - 1]();
  } catch (const Error& e) {
    return Outcome{id, "criterion " + std::to_string(id), false, std::string("error: ") + e.what()};
  }
}

std::string format_outcome(const Outcome& outcome) {
  return std::string(outcome.passed ? "PASS " : "FAIL ") + std::to_string(outcome.id) + " " +
         outcome.title + ": " + outcome.detail;
}

int run_suite(std::ostream& out, bool stop_at_first_failure) {
  int failures = 0;
  for (int id = 1; id <= kCriterionCount; ++id) {
    const Outcome o = run_criterion(id);
    out << format_outcome(o) << '\n' << std::flush;
    if (!o.passed) {
      ++failures;
      if (stop_at_first_failure) break;
    }
  }
  return failures;
}

}  // namespace czeta::acceptance
