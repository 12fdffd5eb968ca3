#include <doctest.h>

#include <cmath>

#include "czeta/complex_core.hpp"
#include "czeta/errors.hpp"
#include "support.hpp"

using namespace czeta;
using test_support::bitwise_equal;
using test_support::Gen;
using test_support::rel_err;

namespace {
const Complex I(0.0, 1.0);
const double kSqrtPi = std::sqrt(kPi);
}  // namespace

TEST_CASE("cpow_principal examples") {
  CHECK(std::abs(cpow_principal(I, 2.0) - Complex(-1.0, 0.0)) < 1e-15);
  CHECK(std::abs(cpow_principal(I, 3.0) - Complex(0.0, -1.0)) < 1e-15);
  CHECK(cpow_principal(4.0, 0.5) == Complex(2.0, 0.0));
  CHECK(std::abs(cpow_principal(-I, 2.0) - Complex(-1.0, 0.0)) < 1e-15);
  CHECK(cpow_principal(0.0, 2.5) == Complex(0.0, 0.0));
}

TEST_CASE("cpow_principal rejects the open left half-plane and 0^w with Re w <= 0") {
  CHECK_THROWS_AS(cpow_principal(Complex(-1.0, 0.5), 2.0), DomainError);
  CHECK_THROWS_AS(cpow_principal(0.0, Complex(-1.0, 3.0)), DomainError);
  CHECK_THROWS_AS(cpow_principal(0.0, 0.0), DomainError);
}

TEST_CASE("cpow_principal treats negative zero real part as the boundary") {
  const Complex a = cpow_principal(Complex(-0.0, 2.0), Complex(0.3, 1.0));
  const Complex b = cpow_principal(Complex(0.0, 2.0), Complex(0.3, 1.0));
  CHECK(bitwise_equal(a, b));
}

TEST_CASE("property: exponents add") {
  Gen gen;
  for (int i = 0; i < 2000; ++i) {
    const double modulus = std::exp(gen.uniform(std::log(1e-3), std::log(1e3)));
    const double angle = gen.uniform(-0.499 * kPi, 0.499 * kPi);
    const Complex z = std::polar(modulus, angle);
    const Complex w1 = gen.box(-5.0, 5.0, -5.0, 5.0) * (1.0 / std::sqrt(2.0));
    const Complex w2 = gen.box(-5.0, 5.0, -5.0, 5.0) * (1.0 / std::sqrt(2.0));
    const Complex joint = cpow_principal(z, w1 + w2);
    const Complex split = cpow_principal(z, w1) * cpow_principal(z, w2);
    CHECK(rel_err(split, joint) < 1e-12);
  }
}

TEST_CASE("property: conjugate symmetry is bitwise") {
  Gen gen;
  for (int i = 0; i < 2000; ++i) {
    Complex z = gen.box(0.0, 50.0, -50.0, 50.0);
    if (i % 10 == 0) z = Complex(0.0, z.imag());
    const Complex w = gen.box(-10.0, 10.0, -10.0, 10.0);
    CHECK(bitwise_equal(cpow_principal(std::conj(z), std::conj(w)),
                        std::conj(cpow_principal(z, w))));
  }
}

TEST_CASE("sin_pi_z examples") {
  CHECK(sin_pi_z(0.5) == Complex(1.0, 0.0));
  const Complex at7 = sin_pi_z(7.0);
  CHECK(at7.real() == 0.0);
  CHECK(at7.imag() == 0.0);
  CHECK(rel_err(sin_pi_z(Complex(0.5, 1.0)), 11.591953275521520628) < 1e-14);
}

TEST_CASE("sin_pi and cos_pi have exact zeros") {
  for (int n = -40; n <= 40; ++n) {
    CHECK(sin_pi(n) == 0.0);
    CHECK(cos_pi(n + 0.5) == 0.0);
    CHECK(std::abs(sin_pi(n + 0.5)) == 1.0);
  }
}

TEST_CASE("sin_pi_z guards the contract box") {
  CHECK_THROWS_AS(sin_pi_z(Complex(0.3, 301.0)), DomainError);
  CHECK_THROWS_AS(cos_pi_z(Complex(0.3, -301.0)), DomainError);
}

TEST_CASE("property: |sin(pi z)|^2 = sin^2(pi x) + sinh^2(pi y)") {
  Gen gen;
  for (int i = 0; i < 2000; ++i) {
    const Complex z = gen.box(-10.0, 10.0, -20.0, 20.0);
    const double lhs = std::norm(sin_pi_z(z));
    const double sx = std::sin(kPi * z.real());
    const double sy = std::sinh(kPi * z.imag());
    const double rhs = sx * sx + sy * sy;
    CHECK(std::abs(lhs - rhs) <= 1e-12 * rhs + 1e-300);
  }
}

TEST_CASE("sech_sq_pi examples") {
  CHECK(sech_sq_pi(0.0) == 1.0);
  CHECK(std::abs(sech_sq_pi(1.0) - 0.0074419501427962134523) < 1e-17);
  CHECK(std::abs(sech_sq_pi(1.0) - 0.00744200) < 1e-7);
  CHECK(sech_sq_pi(1000.0) == 0.0);
  CHECK(sech_sq_pi(-1.3) == sech_sq_pi(1.3));
}

TEST_CASE("csch_sq_half examples") {
  CHECK(std::abs(csch_sq_half(2.0) / 0.72406166096631046641 - 1.0) < 1e-14);
  const double t = 1e-8;
  CHECK(std::abs(csch_sq_half(t) / (4.0 / (t * t) - 1.0 / 3.0) - 1.0) < 1e-12);
  CHECK(std::abs(csch_sq_half(100.0) / 1.4880303904083343852e-43 - 1.0) < 1e-13);
  CHECK_THROWS_AS(csch_sq_half(0.0), DomainError);
  CHECK_THROWS_AS(csch_sq_half(-1.0), DomainError);
}

TEST_CASE("csch_sq_half branches agree at the switchover") {
  const double below = std::nextafter(1e-4, 0.0);
  const double above = std::nextafter(1e-4, 1.0);
  CHECK(std::abs(csch_sq_half(below) / csch_sq_half(above) - 1.0) < 1e-12);
}

TEST_CASE("log_gamma examples") {
  CHECK(std::abs(log_gamma(1.0)) < 1e-15);
  CHECK(std::abs(log_gamma(5.0) - 3.1780538303479456196) < 1e-14);
  CHECK(std::abs(log_gamma(0.5) - 0.57236494292470008707) < 1e-14);
  CHECK_THROWS_AS(log_gamma(0.0), PoleError);
  CHECK_THROWS_AS(log_gamma(-3.0), PoleError);
}

TEST_CASE("gamma examples") {
  CHECK(std::abs(czeta::gamma(2.0) - 1.0) < 1e-15);
  CHECK(rel_err(czeta::gamma(0.5), kSqrtPi) < 1e-14);
  CHECK(rel_err(czeta::gamma(-0.5), -2.0 * kSqrtPi) < 1e-14);
  CHECK(czeta::gamma(3.0).imag() == 0.0);
  CHECK_THROWS_AS(czeta::gamma(-2.0), PoleError);
}

TEST_CASE("gamma and log_gamma agree") {
  Gen gen;
  for (int i = 0; i < 500; ++i) {
    const Complex z = gen.box(0.5, 20.0, -20.0, 20.0);
    CHECK(rel_err(std::exp(log_gamma(z)), czeta::gamma(z)) < 1e-12);
  }
}

TEST_CASE("property: gamma recurrence") {
  Gen gen;
  int checked = 0;
  while (checked < 2000) {
    const Complex z = gen.box(-30.0, 30.0, -30.0, 30.0);
    const double dist = std::abs(z - std::round(z.real()));
    if (z.real() < 0.5 && dist < 0.1) continue;
    CHECK(rel_err(czeta::gamma(z + 1.0), z * czeta::gamma(z)) < 1e-11);
    ++checked;
  }
}

TEST_CASE("property: gamma reflection") {
  Gen gen;
  int checked = 0;
  while (checked < 2000) {
    const Complex z = gen.box(-20.0, 20.0, -10.0, 10.0);
    if (std::abs(z - std::round(z.real())) <= 0.1) continue;
    const Complex product = czeta::gamma(z) * czeta::gamma(1.0 - z) * sin_pi_z(z) / kPi;
    CHECK(std::abs(product - 1.0) < 1e-10);
    ++checked;
  }
}
