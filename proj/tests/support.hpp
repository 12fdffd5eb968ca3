#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "czeta/complex_core.hpp"

namespace test_support {

using czeta::Complex;

inline double rel_err(Complex got, Complex want) {
  const double scale = std::abs(want);
  return scale == 0.0 ? std::abs(got) : std::abs(got - want) / scale;
}

inline bool bitwise_equal(Complex a, Complex b) {
  return std::signbit(a.real()) == std::signbit(b.real()) && a.real() == b.real() &&
         std::signbit(a.imag()) == std::signbit(b.imag()) && a.imag() == b.imag();
}

// Fixed seed so every run draws the same cases.
class Gen {
 public:
  explicit Gen(std::uint64_t seed = 0x5eed'2026'c0de) : rng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  Complex box(double re_lo, double re_hi, double im_lo, double im_hi) {
    const double re = uniform(re_lo, re_hi);
    return {re, uniform(im_lo, im_hi)};
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace test_support
