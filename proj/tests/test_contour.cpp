#include <doctest.h>

#include <cmath>

#include "czeta/contour.hpp"
#include "czeta/errors.hpp"
#include "czeta/oracle.hpp"
#include "support.hpp"

using namespace czeta;
using test_support::Gen;

namespace {

constexpr double kZeta2 = 1.6449340668482264365;
constexpr double kZeta3 = 1.2020569031595942854;
constexpr double kSech2Pi = 0.0074419501427962134523;

ContourSpec with_shift(int shift, double sigma = 0.5) {
  ContourSpec spec;
  spec.sigma = sigma;
  spec.shift = shift;
  return spec;
}

}  // namespace

TEST_CASE("ball_integrand_line examples") {
  CHECK(std::abs(ball_integrand_line(0.0, 1.0, 0.5) - kPi * kPi) < 1e-14);
  CHECK(std::abs(ball_integrand_line(0.0, 0.0, 0.5) - kPi * kPi / 2.0) < 1e-14);
  const Complex want = kPi * kPi * Complex(0.4, -0.8) * kSech2Pi;
  CHECK(std::abs(ball_integrand_line(1.0, 2.0, 0.5) - want) < 1e-15);
  CHECK_THROWS_AS(ball_integrand_line(0.0, 2.0, 1.0), DomainError);
  CHECK_THROWS_AS(ball_integrand(0.0, 2.0, 2.0), DomainError);
}

TEST_CASE("reduced kernel matches the general kernel on half-integer lines") {
  Gen gen;
  for (int i = 0; i < 200; ++i) {
    const double y = gen.uniform(-5.0, 5.0);
    const Complex s = gen.box(-3.0, 3.0, -10.0, 10.0);
    const Complex z(0.5, y);
    const Complex sine = sin_pi_z(z);
    const Complex general = kPi * kPi * cpow_principal(z, 1.0 - s) / (sine * sine);
    CHECK(test_support::rel_err(ball_integrand_line(y, s, 0.5), general) < 1e-13);
  }
}

TEST_CASE("entire_e_line examples") {
  const ContourSpec line = with_shift(0);
  CHECK(std::abs(entire_e_line(1.0, line).value - 1.0) < 1e-12);
  CHECK(std::abs(entire_e_line(0.0, line).value - 0.5) < 1e-12);
  CHECK(std::abs(entire_e_line(2.0, line).value - kZeta2) < 1e-10);
  CHECK(std::abs(entire_e_line(-2.0, line).value) < 1e-10);
  const EvalResult r = entire_e_line(2.0);
  CHECK(r.converged);
  CHECK(r.method == Method::line);
  CHECK(r.err_est < 1e-12);
  CHECK(r.n_evals < 10'000);
}

TEST_CASE("entire_e_line contract") {
  CHECK_THROWS_AS(entire_e_line(Complex(0.5, 60.5)), ContractViolation);
  ContourSpec bad;
  bad.sigma = 0.0;
  CHECK_THROWS_AS(entire_e_line(2.0, bad), DomainError);
  bad = ContourSpec{};
  bad.shift = -1;
  CHECK_THROWS_AS(entire_e_line(2.0, bad), DomainError);
}

TEST_CASE("automatic shift follows |Im s|") {
  const ContourSpec spec;
  CHECK(spec.shift_for(Complex(0.5, 0.0)) == 0);
  CHECK(spec.shift_for(Complex(0.5, 3.0)) == 0);
  CHECK(spec.shift_for(Complex(0.5, -30.0)) == 9);
  CHECK(entire_e_line(Complex(0.5, 20.0)).shift == 6);
}

TEST_CASE("entire_e_line against frozen high-precision values") {
  struct Case {
    Complex s;
    Complex zeta;
  };
  const Case cases[] = {
      {{0.5, 5.0}, {0.70181237116568663004, 0.23103800839141992679}},
      {{0.5, 30.0}, {-0.12064228759004369991, -0.58369121476370628876}},
      {{-5.0, 5.0}, {-0.64859202715106790173, -0.059935154324095705772}},
      {{3.0, 20.0}, {0.98826148470410569332, -0.1320447902710808623}},
      {{-1.5, 10.0}, {2.9131935600100726483, 0.30752607581256081588}},
      {{0.5, 60.0}, {0.54120083514634811115, 0.22718392236826872865}},
      {{-10.0, 3.0}, {-0.43917979013565689485, 0.0044681275606814779888}},
  };
  for (const Case& c : cases) {
    const EvalResult r = zeta(c.s);
    CHECK(std::abs(r.value - c.zeta) < 1e-10 * std::max(1.0, std::abs(c.zeta)));
    CHECK(std::abs(r.value - c.zeta) <= r.err_est + 1e-12);
  }
}

TEST_CASE("entire_e_axis examples") {
  const EvalResult at_minus2 = entire_e_axis(-2.0);
  CHECK(at_minus2.value == Complex(0.0, 0.0));
  CHECK(std::abs(entire_e_axis(-1.0).value - 1.0 / 6.0) < 1e-10);
  const EvalResult line = entire_e_line(-0.5);
  const EvalResult axis = entire_e_axis(-0.5);
  CHECK(std::abs(line.value - axis.value) <= line.err_est + axis.err_est);
  CHECK_THROWS_AS(entire_e_axis(-0.01), DomainError);
  CHECK_THROWS_AS(entire_e_axis(Complex(-1.0, 61.0)), ContractViolation);
}

TEST_CASE("residue_at examples") {
  CHECK(residue_at(1, 1.0) == Complex(0.0, 0.0));
  CHECK(std::abs(residue_at(2, 2.0) + 0.25) < 1e-16);
  CHECK(residue_at(3, 0.0) == Complex(1.0, 0.0));
  CHECK_THROWS_AS(residue_at(0, 2.0), DomainError);
}

TEST_CASE("residue_partial_sum examples") {
  const PartialSum one = residue_partial_sum(2.0, 1);
  CHECK(one.value == Complex(1.0, 0.0));
  CHECK(one.tail_bound == 1.0);

  const PartialSum three = residue_partial_sum(3.0, 10'000);
  CHECK(std::abs(three.tail_bound - 1e-8) < 1e-20);
  CHECK(std::abs(three.value - 2.0 * kZeta3) <= three.tail_bound);

  const PartialSum two = residue_partial_sum(2.0, 1'000'000);
  CHECK(std::abs(two.value - kZeta2) <= two.tail_bound);
  CHECK(two.tail_bound <= 1.0000001e-6);

  CHECK_THROWS_AS(residue_partial_sum(1.0, 10), DomainError);
  CHECK_THROWS_AS(residue_partial_sum(2.0, 0), DomainError);
}

TEST_CASE("zeta examples") {
  CHECK(std::abs(zeta(0.0).value + 0.5) < 1e-11);
  CHECK(std::abs(zeta(2.0).value - kZeta2) < 1e-10);
  CHECK(std::abs(zeta(-1.0).value + 1.0 / 12.0) < 1e-10);
  CHECK_THROWS_AS(zeta(1.0), PoleAtOne);
  CHECK_THROWS_AS(zeta(Complex(1.0, 5e-7)), PoleAtOne);
  try {
    zeta(1.0);
  } catch (const PoleAtOne& e) {
    CHECK(std::string(e.what()) == "pole at s=1; evaluate E instead");
  }
  CHECK_NOTHROW(zeta(Complex(1.0, 2e-6)));
}

TEST_CASE("method names round-trip") {
  for (Method m : {Method::line, Method::axis, Method::residue_sum, Method::oracle}) {
    CHECK(parse_method(method_name(m)) == m);
  }
  CHECK_FALSE(parse_method("simpson").has_value());
}

TEST_CASE("property: Schwarz reflection") {
  Gen gen;
  for (int i = 0; i < 100; ++i) {
    const Complex s = gen.box(-4.0, 5.0, -20.0, 20.0);
    const Complex a = entire_e_line(std::conj(s)).value;
    const Complex b = std::conj(entire_e_line(s).value);
    CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)));
  }
}

TEST_CASE("property: contour independence") {
  for (Complex s : {Complex(2.0, 0.0), Complex(0.5, 3.0), Complex(-1.5, 0.0)}) {
    for (int shift : {0, 2}) {
      EvalResult results[3];
      const double sigmas[3] = {0.3, 0.5, 0.7};
      for (int k = 0; k < 3; ++k) results[k] = entire_e_line(s, with_shift(shift, sigmas[k]));
      for (int a = 0; a < 3; ++a) {
        for (int b = a + 1; b < 3; ++b) {
          CHECK(std::abs(results[a].value - results[b].value) <=
                results[a].err_est + results[b].err_est);
        }
      }
    }
  }
}

TEST_CASE("property: shifted and literal lines agree") {
  Gen gen;
  for (int i = 0; i < 40; ++i) {
    const Complex s = gen.box(-3.0, 4.0, -12.0, 12.0);
    const EvalResult literal = entire_e_line(s, with_shift(0));
    const EvalResult shifted = entire_e_line(s, with_shift(3));
    CHECK(std::abs(literal.value - shifted.value) <= literal.err_est + shifted.err_est + 1e-12);
  }
}

TEST_CASE("property: residue identity for Re s > 1") {
  Gen gen;
  for (int i = 0; i < 20; ++i) {
    const Complex s = gen.box(1.5, 5.0, -10.0, 10.0);
    const EvalResult e = entire_e_line(s);
    const PartialSum p = residue_partial_sum(s, 10'000);
    // Rounding in the 10^4-term sum sits below the tail bound's resolution.
    const double rounding = 64.0 * 2.2e-16 * std::abs(p.value);
    CHECK(std::abs(e.value - p.value) <= p.tail_bound + e.err_est + rounding);
  }
}

TEST_CASE("property: line and axis agree for Re s <= -0.1") {
  Gen gen;
  for (int i = 0; i < 40; ++i) {
    const Complex s = gen.box(-6.0, -0.1, -10.0, 10.0);
    const EvalResult line = entire_e_line(s, with_shift(0));
    const EvalResult axis = entire_e_axis(s);
    CHECK(std::abs(line.value - axis.value) <= line.err_est + axis.err_est + 1e-10);
  }
}

TEST_CASE("property: E is smooth across Re s = 1") {
  const double h = 1e-2;
  for (double im : {0.0, 0.7, 4.0}) {
    auto e = [im](double re) { return entire_e_line(Complex(re, im)).value; };
    // Quadratic extrapolation to Re s = 1 from each side.
    const Complex left = 3.0 * e(1.0 - h) - 3.0 * e(1.0 - 2 * h) + e(1.0 - 3 * h);
    const Complex right = 3.0 * e(1.0 + h) - 3.0 * e(1.0 + 2 * h) + e(1.0 + 3 * h);
    CHECK(std::abs(left - right) < 1e-6);
    CHECK(std::abs(e(1.0 - h) - 2.0 * e(1.0) + e(1.0 + h)) < 1e-3);
  }
}

TEST_CASE("zeta agrees with the oracle on a grid") {
  for (double re : {-4.0, -1.5, 0.2, 0.8, 1.5, 3.0}) {
    for (double im : {-25.0, -3.0, 0.5, 12.0, 40.0}) {
      const Complex s(re, im);
      const EvalResult c = zeta(s);
      const oracle::OracleValue o = oracle::zeta_euler_maclaurin(s);
      CHECK(std::abs(c.value - o.value) <= c.err_est + o.err_bound + 1e-12);
    }
  }
}
