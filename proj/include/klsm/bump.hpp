#ifndef KLSM_BUMP_HPP
#define KLSM_BUMP_HPP

#include <span>
#include <vector>

namespace klsm {

/// Standard smooth cutoff: 1 on [-1, 1], 0 outside (-2, 2), even,
/// values in [0, 1], C-infinity (built from exp(-1/s) smoothstep).
double bump(double t);

/// psi_delta(t) = bump(t / delta), 0 < delta <= 1.
double bump_window(double delta, double t);

std::vector<double> bump_window(double delta, std::span<const double> times);

} // namespace klsm

#endif
