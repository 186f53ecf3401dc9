#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>

namespace secnoma {

struct Minimum {
  double x = 0.0;
  double value = std::numeric_limits<double>::infinity();
};

/// Golden-section search on [lo, hi] down to width `tol`. Infeasible points
/// report +inf; ties (including inf/inf) move the bracket towards `hi`, so the
/// infeasible region must lie on the low side.
template <class F>
Minimum golden_section(F&& f, double lo, double hi, double tol) {
  if (!(hi > lo)) return {lo, f(lo)};
  constexpr double kInvPhi = 0.61803398874989484820;
  double c = hi - kInvPhi * (hi - lo);
  double d = lo + kInvPhi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  Minimum best = fc < fd ? Minimum{c, fc} : Minimum{d, fd};
  while (hi - lo > tol) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kInvPhi * (hi - lo);
      fc = f(c);
      if (fc < best.value) best = {c, fc};
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kInvPhi * (hi - lo);
      fd = f(d);
      if (fd < best.value) best = {d, fd};
    }
  }
  return best;
}

/// Outer search over a task partition in [0, max_bits]: uniform coarse grid,
/// then golden-section refinement inside the neighbouring cells of the best
/// grid point.
struct PartitionSearch {
  std::size_t grid_points = 257;
  double tolerance_bits = 1.0;

  double step(double max_bits) const {
    return grid_points > 1 ? max_bits / static_cast<double>(grid_points - 1) : 0.0;
  }
  double point(double max_bits, std::size_t i) const {
    // Pin the last point to max_bits exactly.
    return i + 1 == grid_points ? max_bits : step(max_bits) * static_cast<double>(i);
  }
};

template <class F>
Minimum minimize_partition(F&& f, double max_bits, const PartitionSearch& search) {
  if (!(max_bits > 0.0) || search.grid_points < 2) return {0.0, f(0.0)};
  Minimum best;
  for (std::size_t i = 0; i < search.grid_points; ++i) {
    const double x = search.point(max_bits, i);
    const double v = f(x);
    if (v < best.value) {
      best = {x, v};
    }
  }
  if (best.value == std::numeric_limits<double>::infinity()) return best;
  const double step = search.step(max_bits);
  const double lo = std::max(0.0, best.x - step);
  const double hi = std::min(max_bits, best.x + step);
  const Minimum refined = golden_section(f, lo, hi, search.tolerance_bits);
  return refined.value < best.value ? refined : best;
}

}  // namespace secnoma
