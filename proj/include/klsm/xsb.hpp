#ifndef KLSM_XSB_HPP
#define KLSM_XSB_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "klsm/evolve.hpp"
#include "klsm/spectral_field.hpp"

// Discrete Bourgain norms on space-time rectangles. The time direction is
// windowed by the caller and then treated as periodic; psi_delta-windowed
// data is compactly supported, so periodization is exact once the window
// fits the span. Norm convention matches the spatial layer:
//   ||f||^2_{X^{s,b}} = L * T * sum <k>^{2s} <tau - phi(k)>^{2b} |c_{tau,k}|^2
// with c the 1/(M N)-normalized 2-D transform.

namespace klsm::xsb {

using klsm::cplx;

struct SpaceTimeField {
  GridPtr grid;
  int num_times = 0;
  double t0 = 0.0, t1 = 0.0;
  std::vector<cplx> values;  // num_times x num_points, row-major

  SpaceTimeField(GridPtr g, int nt, double t_begin, double t_end);

  double span() const { return t1 - t0; }
  double dt() const { return span() / num_times; }
  double time(int i) const { return t0 + i * dt(); }
  std::span<cplx> row(int i);
  std::span<const cplx> row(int i) const;
  bool finite() const;
};

/// Temporal frequencies tau_n = 2 pi m_n / span in FFT order.
std::vector<double> temporal_frequencies(const SpaceTimeField& f);

/// Bourgain norm with spatial weight <k>^s and modulation weight
/// <tau - phi(k)>^b, b in (-1, 1).
double xsb_norm(const SpaceTimeField& f, double s, double b,
                PropagatorKind symbol);

/// Mixed norm ||f||_{L^q_t L^r_x} by quadrature; q or r = infinity uses the
/// max over the corresponding direction.
double mixed_norm(const SpaceTimeField& f, double q, double r);

/// Discrete ||f||_{L^2_t H^s_x} via per-slice spatial norms (independent of
/// the 2-D transform path; used as the b = 0 oracle).
double l2t_hs_norm(const SpaceTimeField& f, double s);

} // namespace klsm::xsb

#endif
