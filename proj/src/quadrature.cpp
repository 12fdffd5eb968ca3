#include "czeta/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "czeta/errors.hpp"

namespace czeta {

namespace {

constexpr int kMaxRuleSize = 64;
constexpr double kMaxCut = 500.0;

GaussLegendreRule build_rule(int n) {
  GaussLegendreRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi's initial guess for the i-th largest root.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    if (2 * i + 1 == n) {
      // Middle node of an odd rule.
      x = 0.0;
      double p0 = 1.0;
      double p1 = 0.0;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n == 1) {
    rule.nodes[0] = 0.0;
    rule.weights[0] = 2.0;
  }
  return rule;
}

struct LevelSum {
  Complex value;
  long evals = 0;
};

LevelSum composite_sum(const Integrand& f, double a, double b, long panels,
                       const GaussLegendreRule& rule) {
  LevelSum out;
  const double span = b - a;
  for (long p = 0; p < panels; ++p) {
    const double left = a + span * static_cast<double>(p) / static_cast<double>(panels);
    const double right = a + span * static_cast<double>(p + 1) / static_cast<double>(panels);
    const double half = 0.5 * (right - left);
    const double mid = 0.5 * (right + left);
    Complex panel_sum;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      const double x = mid + half * rule.nodes[k];
      const Complex fx = f(x);
      if (!is_finite(fx)) {
        throw NonFiniteIntegrand("integrand is not finite at x=" + std::to_string(x));
      }
      panel_sum += rule.weights[k] * fx;
    }
    out.value += half * panel_sum;
  }
  out.evals = panels * static_cast<long>(rule.nodes.size());
  return out;
}

}  // namespace

void QuadraturePlan::validate() const {
  if (nodes_per_panel < 2 || nodes_per_panel > kMaxRuleSize) {
    throw DomainError("QuadraturePlan: nodes_per_panel must be in [2, 64]");
  }
  if (!(panel_width > 0.0) || !std::isfinite(panel_width)) {
    throw DomainError("QuadraturePlan: panel_width must be > 0");
  }
  if (max_refinements < 1) {
    throw DomainError("QuadraturePlan: max_refinements must be >= 1");
  }
  if (!(target_tol >= 1e-14)) {
    throw DomainError("QuadraturePlan: target_tol must be >= 1e-14");
  }
  if (!(rel_tol >= 0.0)) {
    throw DomainError("QuadraturePlan: rel_tol must be >= 0");
  }
  if (!(tail_fraction > 0.0 && tail_fraction <= 0.1)) {
    throw DomainError("QuadraturePlan: tail_fraction must be in (0, 0.1]");
  }
}

double QuadraturePlan::tolerance_for(Complex value) const {
  return std::max(target_tol, rel_tol * std::abs(value));
}

const GaussLegendreRule& gauss_legendre_rule(int n) {
  if (n < 1 || n > kMaxRuleSize) {
    throw DomainError("gauss_legendre_rule: n must be in [1, 64]");
  }
  static const std::array<GaussLegendreRule, kMaxRuleSize> rules = [] {
    std::array<GaussLegendreRule, kMaxRuleSize> out;
    for (int k = 1; k <= kMaxRuleSize; ++k) out[k - 1] = build_rule(k);
    return out;
  }();
  return rules[n - 1];
}

QuadratureResult integrate_interval(const Integrand& f, double a, double b,
                                    const QuadraturePlan& plan) {
  plan.validate();
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("integrate_interval: need finite a < b");
  }
  const GaussLegendreRule& rule = gauss_legendre_rule(plan.nodes_per_panel);
  long panels = std::max(1L, static_cast<long>(std::ceil((b - a) / plan.panel_width - 1e-9)));

  QuadratureResult result;
  result.lower = a;
  result.upper = b;
  LevelSum coarse = composite_sum(f, a, b, panels, rule);
  result.n_evals = coarse.evals;
  for (int level = 1; level <= plan.max_refinements; ++level) {
    panels *= 2;
    const LevelSum fine = composite_sum(f, a, b, panels, rule);
    result.n_evals += fine.evals;
    result.value = fine.value;
    result.err_est = std::abs(fine.value - coarse.value);
    if (result.err_est <= plan.tolerance_for(fine.value)) {
      result.converged = true;
      break;
    }
    coarse = fine;
  }
  return result;
}

double DecayBound::tail(double y) const {
  return constant * std::pow(1.0 + y, growth_bound) * std::exp(-decay_rate * y) / decay_rate;
}

QuadratureResult integrate_line_decaying(const Integrand& f, const DecayBound& bound,
                                         const QuadraturePlan& plan) {
  plan.validate();
  if (!(bound.decay_rate > 0.0) || !(bound.growth_bound >= 0.0) || !(bound.constant > 0.0)) {
    throw DomainError("integrate_line_decaying: invalid decay bound");
  }
  const double budget = plan.tail_fraction * plan.target_tol;
  // The envelope is decreasing beyond its maximum at growth/rate - 1.
  constexpr double kStep = 1.0 / 64.0;
  double height = std::max(plan.panel_width, bound.growth_bound / bound.decay_rate - 1.0);
  height = std::ceil(height / kStep) * kStep;
  while (bound.tail(height) > budget) {
    height += kStep;
    if (height > kMaxCut) {
      throw TruncationFailure("integrate_line_decaying: no truncation height <= 500");
    }
  }
  const double tails = 2.0 * bound.tail(height);

  QuadraturePlan inner = plan;
  inner.target_tol = std::max(1e-14, plan.target_tol - tails);
  const Integrand folded = [&f](double y) { return f(y) + f(-y); };
  QuadratureResult result = integrate_interval(folded, 0.0, height, inner);
  result.n_evals *= 2;
  result.err_est += tails;
  result.converged = result.converged && result.err_est <= plan.tolerance_for(result.value);
  result.lower = -height;
  result.upper = height;
  return result;
}

QuadratureResult integrate_mellin(const Integrand& f, Complex alpha, double decay_rate,
                                  const QuadraturePlan& plan) {
  plan.validate();
  if (!(alpha.real() > -1.0)) {
    throw DomainError("integrate_mellin: Re alpha <= -1 is not integrable at 0");
  }
  if (!(decay_rate > 0.0)) {
    throw DomainError("integrate_mellin: decay_rate must be > 0");
  }
  const Integrand g = [&f](double u) {
    const double t = std::exp(u);
    return f(t) * t;
  };
  const double budget = plan.tail_fraction * plan.target_tol;
  const double step = plan.panel_width;
  long probe_evals = 0;

  // Both scans start near the bulk of t^alpha e^{-rate t}, at t = (alpha + 1) / rate.
  const double center = std::min(
      0.0, std::floor(std::log(std::max(alpha.real() + 1.0, 1e-3) / decay_rate) / step) * step);

  // Left cut.
  constexpr double kAsymptoticDepth = 8.0;
  double left = center;
  Complex left_correction;
  double left_err = 0.0;
  for (;;) {
    left -= step;
    if (left < -kMaxCut) {
      throw TruncationFailure("integrate_mellin: left cut beyond u=-500");
    }
    const Complex gl = g(left);
    ++probe_evals;
    const double tail = std::abs(gl) / (alpha.real() + 1.0);
    if (left <= center - kAsymptoticDepth && tail * std::exp(left) <= budget) {
      left_correction = gl / (alpha + 1.0);
      left_err = tail * std::exp(left);
      break;
    }
    if (tail <= budget) {
      left_err = tail;
      break;
    }
  }

  // Right cut.
  double right = center;
  int satisfied = 0;
  while (satisfied < 2) {
    right += step;
    if (right > kMaxCut) {
      throw TruncationFailure("integrate_mellin: right cut beyond u=500");
    }
    const double t = std::exp(right);
    const double tail = std::abs(f(t)) / decay_rate;
    ++probe_evals;
    satisfied = tail <= budget ? satisfied + 1 : 0;
  }
  const double right_err = std::abs(f(std::exp(right))) / decay_rate;
  ++probe_evals;

  const double tails = left_err + right_err;
  QuadraturePlan inner = plan;
  inner.target_tol = std::max(1e-14, plan.target_tol - tails);
  QuadratureResult result = integrate_interval(g, left, right, inner);
  result.value += left_correction;
  result.err_est += tails;
  result.n_evals += probe_evals;
  result.converged = result.converged && result.err_est <= plan.tolerance_for(result.value);
  return result;
}

}  // namespace czeta
