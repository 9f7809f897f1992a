#pragma once

#include <cmath>
#include <utility>

namespace logharm {

/// Golden-section search for a minimum of a unimodal f on [a, b].
template <typename F>
double golden_section_minimize(F&& f, double a, double b, double tol, int max_iterations = 200) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < max_iterations && (b - a) > tol; ++i) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

/// Uniform scan of `samples` points on [lo, hi]; returns the cell pair
/// around the smallest sample (ties keep the first).
template <typename F>
std::pair<double, double> scan_bracket(F&& f, double lo, double hi, int samples) {
  const double step = (hi - lo) / (samples - 1);
  int best = 0;
  double best_value = f(lo);
  for (int i = 1; i < samples; ++i) {
    const double v = f(lo + i * step);
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }
  const double left = lo + std::max(best - 1, 0) * step;
  const double right = lo + std::min(best + 1, samples - 1) * step;
  return {left, right};
}

}  // namespace logharm
