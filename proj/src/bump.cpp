#include "klsm/bump.hpp"

#include <cmath>
#include <stdexcept>

namespace klsm {

namespace {

inline double g(double s) { return s > 0.0 ? std::exp(-1.0 / s) : 0.0; }

} // namespace

double bump(double t) {
  const double a = std::abs(t);
  if (a <= 1.0) return 1.0;
  if (a >= 2.0) return 0.0;
  const double s = 2.0 - a;  // in (0, 1)
  return g(s) / (g(s) + g(1.0 - s));
}

double bump_window(double delta, double t) {
  if (!(delta > 0.0) || delta > 1.0)
    throw std::invalid_argument("bump_window: delta must lie in (0, 1]");
  return bump(t / delta);
}

std::vector<double> bump_window(double delta, std::span<const double> times) {
  std::vector<double> out(times.size());
  for (std::size_t i = 0; i < times.size(); ++i)
    out[i] = bump_window(delta, times[i]);
  return out;
}

} // namespace klsm
