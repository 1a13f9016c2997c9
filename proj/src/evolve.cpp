#include "klsm/evolve.hpp"

#include <cmath>
#include <stdexcept>

#include "klsm/kernels.hpp"

namespace klsm {

double dispersion_symbol(PropagatorKind kind, double k) {
  switch (kind) {
    case PropagatorKind::schrodinger: return -k * k;
    case PropagatorKind::half_wave_plus: return std::sqrt(1.0 + k * k);
    case PropagatorKind::half_wave_minus: return -std::sqrt(1.0 + k * k);
  }
  return 0.0;
}

std::vector<cplx> propagator_factors(PropagatorKind kind,
                                     std::span<const double> k, double dt) {
  std::vector<cplx> f(k.size());
  for (std::size_t j = 0; j < k.size(); ++j) {
    const double phase = dispersion_symbol(kind, k[j]) * dt;
    f[j] = cplx(std::cos(phase), std::sin(phase));
  }
  return f;
}

namespace {

void apply_propagators(SimState& state, double dt) {
  const auto k = state.grid().wavenumbers();
  const auto fu = propagator_factors(PropagatorKind::schrodinger, k, dt);
  const auto fp = propagator_factors(PropagatorKind::half_wave_plus, k, dt);
  const auto fm = propagator_factors(PropagatorKind::half_wave_minus, k, dt);
  auto& us = state.u.mutable_spectrum();
  auto& ps = state.n_plus.mutable_spectrum();
  auto& ms = state.n_minus.mutable_spectrum();
  kernels::multiply_pointwise(us.data(), fu.data(), us.size());
  kernels::multiply_pointwise(ps.data(), fp.data(), ps.size());
  kernels::multiply_pointwise(ms.data(), fm.data(), ms.size());
  state.time += dt;
}

void apply_nonlinear(SimState& state, double dt, double m,
                     const StepOptions& opts) {
  if (m < 1.0)
    throw std::invalid_argument("nonlinear_substep: requires m >= 1");
  if (state.reality_defect() > 1e-8)
    throw std::invalid_argument(
        "nonlinear_substep: n_minus is not the conjugate of n_plus");

  const Grid& g = state.grid();
  const std::size_t n = static_cast<std::size_t>(g.num_points());

  // physical n = n_plus + n_minus (real by the reality constraint)
  std::vector<cplx> nspec(n);
  const auto ps = state.n_plus.spectrum();
  const auto ms = state.n_minus.spectrum();
  for (std::size_t j = 0; j < n; ++j) nspec[j] = ps[j] + ms[j];
  auto nfield = SpectralField::from_spectrum(state.u.grid_ptr(), std::move(nspec));
  const auto nphys = nfield.physical();
  std::vector<double> nreal(n);
  for (std::size_t j = 0; j < n; ++j) nreal[j] = nphys[j].real();

  // rotate u, collect |u|^{2m}
  auto& up = state.u.mutable_physical();
  std::vector<double> source(n);
  kernels::yukawa_rotate(up.data(), nreal.data(), source.data(), n, m, dt,
                         opts.coupling);

  // n+- <- n+- -+ (i/2) coupling dt A^{-1}(|u|^{2m})
  std::vector<cplx> src_cplx(n);
  for (std::size_t j = 0; j < n; ++j) src_cplx[j] = source[j];
  auto src = SpectralField::from_physical(state.u.grid_ptr(), std::move(src_cplx));
  const auto k = g.wavenumbers();
  const auto ss = src.spectrum();
  auto& pmut = state.n_plus.mutable_spectrum();
  auto& mmut = state.n_minus.mutable_spectrum();
  const cplx half_i(0.0, 0.5 * opts.coupling * dt);
  for (std::size_t j = 0; j < n; ++j) {
    const double inv_a = 1.0 / std::sqrt(1.0 + k[j] * k[j]);
    const cplx kick = half_i * inv_a * ss[j];
    pmut[j] -= kick;
    mmut[j] += kick;
  }
  const auto ny = static_cast<std::size_t>(g.nyquist_index());
  pmut[ny] = 0.0;
  mmut[ny] = 0.0;
}

void require_finite_state(const SimState& state, const char* what) {
  if (!state.finite())
    throw std::invalid_argument(std::string(what) + ": non-finite state");
}

} // namespace

SimState linear_step(const SimState& state, double dt) {
  require_finite_state(state, "linear_step");
  if (!std::isfinite(dt))
    throw std::invalid_argument("linear_step: non-finite dt");
  SimState out = state;
  apply_propagators(out, dt);
  return out;
}

SimState nonlinear_substep(const SimState& state, double dt, double m,
                           const StepOptions& opts) {
  require_finite_state(state, "nonlinear_substep");
  SimState out = state;
  apply_nonlinear(out, dt, m, opts);
  return out;
}

void strang_step_inplace(SimState& state, double dt, double m,
                         const StepOptions& opts) {
  apply_propagators(state, 0.5 * dt);
  apply_nonlinear(state, dt, m, opts);
  if (opts.dealias) {
    dealias_two_thirds(state.u);
    dealias_two_thirds(state.n_plus);
    dealias_two_thirds(state.n_minus);
  }
  apply_propagators(state, 0.5 * dt);
}

SimState strang_step(const SimState& state, double dt, double m,
                     const StepOptions& opts) {
  require_finite_state(state, "strang_step");
  SimState out = state;
  strang_step_inplace(out, dt, m, opts);
  return out;
}

} // namespace klsm
