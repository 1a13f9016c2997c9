#include "klsm/xsb.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "klsm/fft.hpp"
#include "klsm/kernels.hpp"

namespace klsm::xsb {

SpaceTimeField::SpaceTimeField(GridPtr g, int nt, double t_begin, double t_end)
    : grid(std::move(g)), num_times(nt), t0(t_begin), t1(t_end) {
  if (nt < 16)
    throw std::invalid_argument("SpaceTimeField: num_times must be >= 16");
  if (!(t_end > t_begin))
    throw std::invalid_argument("SpaceTimeField: empty time span");
  values.assign(static_cast<std::size_t>(nt) *
                    static_cast<std::size_t>(grid->num_points()),
                cplx(0.0, 0.0));
}

std::span<cplx> SpaceTimeField::row(int i) {
  const auto n = static_cast<std::size_t>(grid->num_points());
  return {values.data() + static_cast<std::size_t>(i) * n, n};
}

std::span<const cplx> SpaceTimeField::row(int i) const {
  const auto n = static_cast<std::size_t>(grid->num_points());
  return {values.data() + static_cast<std::size_t>(i) * n, n};
}

bool SpaceTimeField::finite() const {
  for (const auto& z : values)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

std::vector<double> temporal_frequencies(const SpaceTimeField& f) {
  std::vector<double> tau(static_cast<std::size_t>(f.num_times));
  const double dtau = 2.0 * std::numbers::pi / f.span();
  for (int i = 0; i < f.num_times; ++i) {
    const int m = i < f.num_times / 2 ? i : i - f.num_times;
    tau[static_cast<std::size_t>(i)] = dtau * m;
  }
  return tau;
}

double xsb_norm(const SpaceTimeField& f, double s, double b,
                PropagatorKind symbol) {
  if (!f.finite())
    throw std::invalid_argument("xsb_norm: non-finite field");
  if (!(b > -1.0 && b < 1.0))
    throw std::invalid_argument("xsb_norm: b must lie in (-1, 1)");

  const auto rows = static_cast<std::size_t>(f.num_times);
  const auto cols = static_cast<std::size_t>(f.grid->num_points());
  std::vector<cplx> spec(rows * cols);
  fft::forward_2d(f.values, spec, rows, cols);

  const auto k = f.grid->wavenumbers();
  std::vector<double> kw(cols), phi(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    kw[j] = std::pow(1.0 + k[j] * k[j], s);
    phi[j] = dispersion_symbol(symbol, k[j]);
  }
  const auto tau = temporal_frequencies(f);

  const double sum = kernels::xsb_weighted_sum(spec.data(), rows, cols,
                                               kw.data(), phi.data(),
                                               tau.data(), b);
  return std::sqrt(f.grid->length() * f.span() * sum);
}

double mixed_norm(const SpaceTimeField& f, double q, double r) {
  const bool qinf = std::isinf(q);
  const bool rinf = std::isinf(r);
  const double dx = f.grid->dx();
  const double dt = f.dt();

  double acc_t = 0.0;   // integral for finite q
  double max_t = 0.0;   // sup for q = infinity
  for (int i = 0; i < f.num_times; ++i) {
    const auto row = f.row(i);
    double xnorm;
    if (rinf) {
      double mx = 0.0;
      for (const auto& z : row) mx = std::max(mx, std::abs(z));
      xnorm = mx;
    } else {
      double acc = 0.0;
      for (const auto& z : row) acc += std::pow(std::abs(z), r);
      xnorm = std::pow(dx * acc, 1.0 / r);
    }
    if (qinf)
      max_t = std::max(max_t, xnorm);
    else
      acc_t += std::pow(xnorm, q);
  }
  return qinf ? max_t : std::pow(dt * acc_t, 1.0 / q);
}

double l2t_hs_norm(const SpaceTimeField& f, double s) {
  const auto cols = static_cast<std::size_t>(f.grid->num_points());
  const auto k = f.grid->wavenumbers();
  std::vector<double> w(cols);
  for (std::size_t j = 0; j < cols; ++j)
    w[j] = std::pow(1.0 + k[j] * k[j], s);

  std::vector<cplx> spec(cols);
  double acc = 0.0;
  for (int i = 0; i < f.num_times; ++i) {
    fft::forward(f.row(i), spec);
    double slice = 0.0;
    for (std::size_t j = 0; j < cols; ++j) slice += w[j] * std::norm(spec[j]);
    acc += slice;
  }
  return std::sqrt(f.grid->length() * f.dt() * acc);
}

} // namespace klsm::xsb
