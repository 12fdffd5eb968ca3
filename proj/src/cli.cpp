#include "czeta/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "czeta/acceptance.hpp"
#include "czeta/contour.hpp"
#include "czeta/errors.hpp"
#include "czeta/functional_equation.hpp"
#include "czeta/mellin_lemma.hpp"
#include "czeta/oracle.hpp"
#include "czeta/scan.hpp"

namespace czeta::cli {

namespace {

constexpr double kFeqPassThreshold = 1e-8;

struct PointArgs {
  double re = 0.0;
  double im = 0.0;
  std::optional<double> tol;
};

void add_point(CLI::App* cmd, PointArgs& p) {
  cmd->add_option("--re", p.re, "Real part of s")->required();
  cmd->add_option("--im", p.im, "Imaginary part of s")->required();
  cmd->add_option("--tol", p.tol, "Absolute quadrature tolerance (>= 1e-14)");
}

Complex point_of(const PointArgs& p) { return {p.re, p.im}; }

QuadraturePlan plan_with(QuadraturePlan plan, const std::optional<double>& tol) {
  if (tol) plan.target_tol = *tol;
  plan.validate();
  return plan;
}

std::string complex_fields(Complex z) { return format17(z.real()) + " " + format17(z.imag()); }

// Raised for a result that came back without meeting its tolerance.
struct NotConverged : ConvergenceError {
  using ConvergenceError::ConvergenceError;
};

void require_converged(bool converged) {
  if (!converged) throw NotConverged("quadrature did not reach the requested tolerance");
}

struct EvalArgs {
  PointArgs point;
  std::string method = "line";
  double sigma = 0.5;
  std::optional<int> shift;
  bool entire = false;
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  const Complex s = point_of(a.point);
  ContourSpec spec;
  spec.sigma = a.sigma;
  spec.shift = a.shift;
  spec.plan = plan_with(spec.plan, a.point.tol);
  spec.validate();

  const auto method = parse_method(a.method);
  EvalResult r;
  if (method == Method::line) {
    r = entire_e_line(s, spec);
  } else if (method == Method::axis) {
    r = entire_e_axis(s, spec.plan);
  } else {
    if (a.entire) throw DomainError("eval: --entire is not available with the oracle method");
    const oracle::EulerMaclaurinParams params = oracle::EulerMaclaurinParams::defaults_for(s);
    const oracle::OracleValue v = oracle::zeta_euler_maclaurin(s, params);
    r.value = v.value;
    r.err_est = v.err_bound;
    r.method = Method::oracle;
    r.n_evals = params.cutoff + params.corrections;
  }
  if (!a.entire && r.method != Method::oracle) r = zeta_from_entire(r, s);
  require_converged(r.converged);
  out << complex_fields(r.value) << ' ' << format17(r.err_est) << ' ' << method_name(r.method)
      << ' ' << r.n_evals << '\n';
  return kOk;
}

struct FeqArgs {
  PointArgs point;
  std::string form = "auto";
};

int cmd_feq(const FeqArgs& a, std::ostream& out) {
  ContourSpec spec;
  spec.plan = plan_with(spec.plan, a.point.tol);
  const ChiForm form = a.form == "sine"     ? ChiForm::sine
                       : a.form == "cosine" ? ChiForm::cosine
                                            : ChiForm::automatic;
  const FeqReport rep = feq_check(point_of(a.point), spec, form);
  out << "lhs " << complex_fields(rep.lhs) << '\n'
      << "rhs " << complex_fields(rep.rhs) << '\n'
      << "abs_residual " << format17(rep.abs_residual) << '\n'
      << "rel_residual " << format17(rep.rel_residual) << '\n'
      << "form " << form_name(rep.form) << '\n'
      << "removable_limit " << (rep.removable_limit ? "true" : "false") << '\n';
  return rep.rel_residual <= kFeqPassThreshold ? kOk : kConvergence;
}

int cmd_lemma(const PointArgs& a, std::ostream& out) {
  const LemmaReport rep = lemma_check(point_of(a), plan_with(QuadraturePlan{}, a.tol));
  out << "s " << complex_fields(rep.s) << '\n'
      << "bose " << complex_fields(rep.bose) << '\n'
      << "exp_sq " << complex_fields(rep.exp_sq) << '\n'
      << "sinh_form " << complex_fields(rep.sinh_form) << '\n'
      << "reference " << complex_fields(rep.reference) << '\n'
      << "max_abs_deviation " << format17(rep.max_abs_deviation) << '\n'
      << "err_sum " << format17(rep.err_sum) << '\n'
      << "complex_extension " << (rep.complex_extension ? "true" : "false") << '\n';
  return kOk;
}

struct ResidueArgs {
  double re = 0.0;
  double im = 0.0;
  long n_max = 0;
};

int cmd_residues(const ResidueArgs& a, std::ostream& out) {
  const Complex s(a.re, a.im);
  if (a.n_max < 1) throw DomainError("residues: --n-max must be >= 1");
  std::vector<long> schedule;
  for (long n = 1; n < a.n_max; n *= 2) schedule.push_back(n);
  schedule.push_back(a.n_max);
  std::string text;
  for (long n : schedule) {
    const PartialSum p = residue_partial_sum(s, n);
    text += std::to_string(n) + ' ' + complex_fields(p.value) + ' ' + format17(p.tail_bound) + '\n';
  }
  out << text;
  return kOk;
}

struct ScanArgs {
  ScanGrid grid;
  std::string path;
  unsigned threads = 0;
  std::optional<double> tol;
  double sigma = 0.5;
};

int cmd_scan(const ScanArgs& a, std::ostream& err) {
  a.grid.validate();
  ContourSpec spec;
  spec.sigma = a.sigma;
  spec.plan = plan_with(spec.plan, a.tol);
  spec.validate();
  std::ofstream file(a.path, std::ios::binary | std::ios::trunc);
  if (!file) throw DomainError("scan: cannot create output file '" + a.path + "'");
  bool converged = true;
  const std::string csv = scan_csv(a.grid, spec, a.threads, &converged);
  file << csv;
  file.close();
  if (!file) throw DomainError("scan: failed writing '" + a.path + "'");
  if (!converged) {
    err << "scan: some grid points did not reach the requested tolerance\n";
    return kConvergence;
  }
  return kOk;
}

int cmd_selftest(std::ostream& out) {
  return acceptance::run_suite(out, true) == 0 ? kOk : kConvergence;
}

}  // namespace

std::string format17(double x) {
  if (x == 0.0) x = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Riemann zeta from a single contour integral"};
  app.name("czeta");
  app.require_subcommand(1);

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate zeta(s), or E(s) = (s-1) zeta(s)");
  add_point(eval_cmd, eval.point);
  eval_cmd->add_option("--method", eval.method, "line, axis or oracle")
      ->check(CLI::IsMember({"line", "axis", "oracle"}));
  eval_cmd->add_option("--sigma", eval.sigma, "Abscissa of the line contour, in (0, 1)");
  eval_cmd->add_option("--shift", eval.shift, "Poles to move the line across (default: automatic)");
  eval_cmd->add_flag("--entire", eval.entire, "Print E(s) instead of zeta(s)");

  FeqArgs feq;
  auto* feq_cmd = app.add_subcommand("feq", "Check zeta(s) = chi(s) zeta(1-s)");
  add_point(feq_cmd, feq.point);
  feq_cmd->add_option("--form", feq.form, "auto, sine or cosine")
      ->check(CLI::IsMember({"auto", "sine", "cosine"}));

  PointArgs lemma;
  auto* lemma_cmd = app.add_subcommand("lemma", "Compare three Mellin integrals with Gamma(s) zeta(s)");
  add_point(lemma_cmd, lemma);

  ResidueArgs residues;
  auto* residues_cmd = app.add_subcommand("residues", "Partial residue sums on a doubling schedule");
  residues_cmd->add_option("--re", residues.re, "Real part of s")->required();
  residues_cmd->add_option("--im", residues.im, "Imaginary part of s")->required();
  residues_cmd->add_option("--n-max", residues.n_max, "Largest number of terms")->required();

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "Write E(s) and zeta(s) on a grid as CSV");
  scan_cmd->add_option("--re-min", scan.grid.re_min)->required();
  scan_cmd->add_option("--re-max", scan.grid.re_max)->required();
  scan_cmd->add_option("--im-min", scan.grid.im_min)->required();
  scan_cmd->add_option("--im-max", scan.grid.im_max)->required();
  scan_cmd->add_option("--steps-re", scan.grid.steps_re, "Points along Re s (>= 1)");
  scan_cmd->add_option("--steps-im", scan.grid.steps_im, "Points along Im s (>= 1)");
  scan_cmd->add_option("--out", scan.path, "Output CSV path")->required();
  scan_cmd->add_option("--threads", scan.threads, "Worker threads, 0 = all cores");
  scan_cmd->add_option("--tol", scan.tol, "Absolute quadrature tolerance (>= 1e-14)");
  scan_cmd->add_option("--sigma", scan.sigma, "Abscissa of the line contour, in (0, 1)");

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance suite");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "czeta: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*eval_cmd) return cmd_eval(eval, out);
    if (*feq_cmd) return cmd_feq(feq, out);
    if (*lemma_cmd) return cmd_lemma(lemma, out);
    if (*residues_cmd) return cmd_residues(residues, out);
    if (*scan_cmd) return cmd_scan(scan, err);
    if (*selftest_cmd) return cmd_selftest(out);
  } catch (const DomainError& e) {
    err << "czeta: " << e.what() << '\n';
    return kDomain;
  } catch (const Error& e) {
    err << "czeta: " << e.what() << '\n';
    return kConvergence;
  }
  return kUsage;
}

}  // namespace czeta::cli
