#include "klsm/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "klsm/kernels.hpp"

namespace klsm {

namespace {

void require_real_tol(const SpectralField& f, const char* what) {
  double amp = 0.0, imag = 0.0;
  for (const cplx& z : f.physical()) {
    amp = std::max(amp, std::abs(z));
    imag = std::max(imag, std::abs(z.imag()));
  }
  if (imag > 1e-8 * std::max(amp, 1.0))
    throw std::invalid_argument(std::string(what) + ": not real-valued");
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

} // namespace

GrowthBound make_growth_bound(double c_rate, double c_front, double n_half0,
                              double nt_minus_half0, double mass_u0, double m) {
  GrowthBound b;
  b.c_rate = c_rate;
  b.c_front = c_front;
  b.baseline =
      std::max(n_half0 + nt_minus_half0, std::pow(mass_u0, 2.0 * m));
  return b;
}

double bound_value(const GrowthBound& b, double t, double mass_u0, double m) {
  return b.c_front *
         std::exp(b.c_rate * std::abs(t) * std::pow(mass_u0, 4.0 * m - 2.0)) *
         b.baseline;
}

double mass(const SpectralField& u) {
  const auto v = u.physical();
  const double sum =
      kernels::weighted_abs2_sum(v.data(), nullptr, v.size());
  return std::sqrt(u.grid().dx() * sum);
}

double sobolev_norm(const SpectralField& field, double s) {
  const auto c = field.spectrum();
  if (s == 0.0) {
    const double sum = kernels::weighted_abs2_sum(c.data(), nullptr, c.size());
    return std::sqrt(field.grid().length() * sum);
  }
  const auto k = field.grid().wavenumbers();
  std::vector<double> w(k.size());
  for (std::size_t j = 0; j < k.size(); ++j)
    w[j] = std::pow(1.0 + k[j] * k[j], s);
  const double sum = kernels::weighted_abs2_sum(c.data(), w.data(), c.size());
  return std::sqrt(field.grid().length() * sum);
}

double energy(const SpectralField& u, const SpectralField& n,
              const SpectralField& n_t, double m) {
  require_real_tol(n, "energy(n)");
  require_real_tol(n_t, "energy(n_t)");
  const Grid& g = u.grid();
  const auto k = g.wavenumbers();

  // ||u_x||^2 = L * sum k^2 |u_k|^2
  std::vector<double> k2(k.size()), a2(k.size());
  for (std::size_t j = 0; j < k.size(); ++j) {
    k2[j] = k[j] * k[j];
    a2[j] = 1.0 + k2[j];
  }
  const auto us = u.spectrum();
  const auto ns = n.spectrum();
  const auto nts = n_t.spectrum();
  const double grad_u =
      g.length() * kernels::weighted_abs2_sum(us.data(), k2.data(), us.size());
  const double an =
      g.length() * kernels::weighted_abs2_sum(ns.data(), a2.data(), ns.size());
  const double nt2 =
      g.length() * kernels::weighted_abs2_sum(nts.data(), nullptr, nts.size());

  const auto up = u.physical();
  const auto np = n.physical();
  double coupling = 0.0;
  for (std::size_t j = 0; j < up.size(); ++j)
    coupling += std::pow(std::norm(up[j]), m) * np[j].real();
  coupling *= g.dx();

  return grad_u + 0.5 * (an + nt2) - coupling;
}

GrowthReport growth_bound_check(const std::vector<DiagnosticsRow>& history,
                                const GrowthBound& bound, double mass_u0,
                                double m) {
  if (history.empty())
    throw std::invalid_argument("growth_bound_check: empty history");
  for (std::size_t i = 1; i < history.size(); ++i)
    if (history[i].time < history[i - 1].time)
      throw std::invalid_argument("growth_bound_check: history not time-sorted");

  GrowthReport report;
  report.bound_values.reserve(history.size());
  const double initial = history.front().n_half + history.front().nt_minus_half;
  for (std::size_t i = 0; i < history.size(); ++i) {
    const auto& row = history[i];
    const double value = row.n_half + row.nt_minus_half;
    const double bv = bound_value(bound, row.time, mass_u0, m);
    report.bound_values.push_back(bv);
    if (value > bv) report.violations.push_back(static_cast<int>(i));
    if (report.first_doubling_row < 0 && value >= 2.0 * initial)
      report.first_doubling_row = static_cast<int>(i);
  }

  // Minimal (c_front, c_rate) on a log grid: smallest c_front admitting any
  // c_rate, then the smallest such c_rate.
  const int front_steps = 13; // 2^(j/4), j = 0..12 -> [1, 8]
  const int rate_steps = 31;  // 10^(-2 + j/10), j = 0..30 -> [0.01, 10]
  for (int jf = 0; jf < front_steps && !report.fit.found; ++jf) {
    const double cf = std::pow(2.0, jf / 4.0);
    for (int jr = 0; jr < rate_steps; ++jr) {
      const double cr = std::pow(10.0, -2.0 + jr / 10.0);
      GrowthBound cand = bound;
      cand.c_front = cf;
      cand.c_rate = cr;
      bool ok = true;
      for (const auto& row : history) {
        if (row.n_half + row.nt_minus_half >
            bound_value(cand, row.time, mass_u0, m)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        report.fit = {cf, cr, true};
        break;
      }
    }
  }
  return report;
}

std::string diagnostics_csv_header() {
  return "t,mass,energy,n_half,nt_minus_half,bound_value,doubled";
}

std::string diagnostics_csv_row(const DiagnosticsRow& row) {
  std::string out;
  out += fmt(row.time);
  out += ',';
  out += fmt(row.mass);
  out += ',';
  out += fmt(row.energy);
  out += ',';
  out += fmt(row.n_half);
  out += ',';
  out += fmt(row.nt_minus_half);
  out += ',';
  out += fmt(row.bound_value);
  out += ',';
  out += row.doubled ? '1' : '0';
  return out;
}

} // namespace klsm
