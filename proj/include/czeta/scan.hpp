#pragma once

#include <iosfwd>
#include <string>

#include "czeta/contour.hpp"

namespace czeta {

/// Rectangular grid of s values, inclusive of both ends on each axis.
struct ScanGrid {
  double re_min = 0.0;
  double re_max = 0.0;
  double im_min = 0.0;
  double im_max = 0.0;
  int steps_re = 1;
  int steps_im = 1;

  static constexpr long kMaxPoints = 1'000'000;

  /// Throws DomainError on inverted bounds, steps < 1, non-finite bounds or
  /// more than 10^6 points.
  void validate() const;
  long size() const { return static_cast<long>(steps_re) * steps_im; }
  /// Point with row-major index (im outer, re inner).
  Complex point(long index) const;
};

inline constexpr const char* kScanHeader = "re_s,im_s,re_E,im_E,re_zeta,im_zeta,abs_zeta,err_est";

/// Shortest decimal that round-trips the double.
std::string format_shortest(double x);

/// CSV text for the grid: header plus one LF-terminated row per point in
/// row-major order. zeta fields are empty inside the pole guard. err_est is
/// the zeta estimate where zeta is defined and the E estimate otherwise.
///
/// threads = 0 uses the hardware concurrency, 1 runs serially. Output does
/// not depend on the thread count. Sets *all_converged when given.
std::string scan_csv(const ScanGrid& grid, const ContourSpec& spec, unsigned threads,
                     bool* all_converged = nullptr);

}  // namespace czeta
