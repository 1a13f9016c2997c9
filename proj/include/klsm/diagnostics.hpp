#ifndef KLSM_DIAGNOSTICS_HPP
#define KLSM_DIAGNOSTICS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "klsm/spectral_field.hpp"

namespace klsm {

/// One monitored sample of a run. CSV column order is fixed:
/// t, mass, energy, n_half, nt_minus_half, bound_value, doubled.
struct DiagnosticsRow {
  double time = 0.0;
  double mass = 0.0;          // ||u||_{L2}
  double energy = 0.0;
  double n_half = 0.0;        // ||n||_{H^{1/2}}
  double nt_minus_half = 0.0; // ||n_t||_{H^{-1/2}}
  double bound_value = 0.0;
  bool doubled = false;
};

/// Exponential growth envelope
///   bound(t) = c_front * exp(c_rate * t * mass_u0^{4m-2}) * baseline,
/// baseline = max(n_half(0) + nt_minus_half(0), mass_u0^{2m}).
struct GrowthBound {
  double c_rate = 1.0;
  double c_front = 1.0;
  double baseline = 0.0;
};

GrowthBound make_growth_bound(double c_rate, double c_front, double n_half0,
                              double nt_minus_half0, double mass_u0, double m);

double bound_value(const GrowthBound& b, double t, double mass_u0, double m);

/// Discrete L2 norm: sqrt(dx * sum |f_j|^2).
double mass(const SpectralField& u);

/// sqrt(L * sum <k>^{2s} |c_k|^2); s = 0 coincides with mass.
double sobolev_norm(const SpectralField& field, double s);

/// ||u_x||^2 + (||A n||^2 + ||n_t||^2)/2 - integral(|u|^{2m} n dx).
/// Derivative terms are spectral; the coupling integral uses the dx-weighted
/// physical sum. n and n_t must be real to tolerance.
double energy(const SpectralField& u, const SpectralField& n,
              const SpectralField& n_t, double m);

struct GrowthFit {
  double c_front = 0.0;
  double c_rate = 0.0;
  bool found = false;
};

struct GrowthReport {
  GrowthFit fit;                    // minimal grid pair covering the history
  std::vector<double> bound_values; // using the user-supplied bound
  std::vector<int> violations;      // row indices violating the user bound
  int first_doubling_row = -1;      // vs. the t=0 value of n_half+nt
};

/// Checks history against a fixed bound and fits the minimal (c_front,
/// c_rate) on a log grid for which no row exceeds the envelope.
GrowthReport growth_bound_check(const std::vector<DiagnosticsRow>& history,
                                const GrowthBound& bound, double mass_u0,
                                double m);

std::string diagnostics_csv_header();
std::string diagnostics_csv_row(const DiagnosticsRow& row);

} // namespace klsm

#endif
