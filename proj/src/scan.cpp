#include "czeta/scan.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "czeta/errors.hpp"

namespace czeta {

namespace {

struct Cell {
  Complex s;
  EvalResult entire;
  std::optional<EvalResult> zeta;
};

Cell evaluate_cell(Complex s, const ContourSpec& spec) {
  Cell cell;
  cell.s = s;
  cell.entire = entire_e_line(s, spec);
  if (!in_pole_guard(s)) {
    cell.zeta = zeta_from_entire(cell.entire, s);
  }
  return cell;
}

void append_row(std::string& out, const Cell& cell) {
  out += format_shortest(cell.s.real());
  out += ',';
  out += format_shortest(cell.s.imag());
  out += ',';
  out += format_shortest(cell.entire.value.real());
  out += ',';
  out += format_shortest(cell.entire.value.imag());
  out += ',';
  if (cell.zeta) {
    out += format_shortest(cell.zeta->value.real());
    out += ',';
    out += format_shortest(cell.zeta->value.imag());
    out += ',';
    out += format_shortest(std::abs(cell.zeta->value));
    out += ',';
    out += format_shortest(cell.zeta->err_est);
  } else {
    out += ",,,";
    out += format_shortest(cell.entire.err_est);
  }
  out += '\n';
}

double axis_value(double lo, double hi, int steps, int i) {
  if (steps == 1) return lo;
  if (i == steps - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

}  // namespace

void ScanGrid::validate() const {
  for (double v : {re_min, re_max, im_min, im_max}) {
    if (!std::isfinite(v)) throw DomainError("scan grid: bounds must be finite");
  }
  if (re_min > re_max || im_min > im_max) {
    throw DomainError("scan grid: min must not exceed max");
  }
  if (steps_re < 1 || steps_im < 1) {
    throw DomainError("scan grid: steps must be >= 1");
  }
  if (size() > kMaxPoints) {
    throw DomainError("scan grid: more than 10^6 points");
  }
}

Complex ScanGrid::point(long index) const {
  const int i_re = static_cast<int>(index % steps_re);
  const int i_im = static_cast<int>(index / steps_re);
  return {axis_value(re_min, re_max, steps_re, i_re), axis_value(im_min, im_max, steps_im, i_im)};
}

std::string format_shortest(double x) {
  if (x == 0.0) x = 0.0;  // no "-0"
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string scan_csv(const ScanGrid& grid, const ContourSpec& spec, unsigned threads,
                     bool* all_converged) {
  grid.validate();
  spec.validate();
  const long n = grid.size();
  std::vector<Cell> cells(static_cast<std::size_t>(n));

  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<long>(workers, n));

  std::atomic<long> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (long i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
      try {
        cells[static_cast<std::size_t>(i)] = evaluate_cell(grid.point(i), spec);
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(n);
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  std::string out = kScanHeader;
  out += '\n';
  bool converged = true;
  for (const Cell& cell : cells) {
    append_row(out, cell);
    converged = converged && cell.entire.converged;
  }
  if (all_converged) *all_converged = converged;
  return out;
}

}  // namespace czeta
