#ifndef KLSM_EVOLVE_HPP
#define KLSM_EVOLVE_HPP

#include <string>
#include <vector>

#include "klsm/exponents.hpp"
#include "klsm/spectral_field.hpp"

namespace klsm {

enum class PropagatorKind { schrodinger, half_wave_plus, half_wave_minus };

/// Dispersion symbol phi(k): -k^2 for the Schrodinger flow, +-<k> for the
/// two half-wave flows.
double dispersion_symbol(PropagatorKind kind, double k);

/// Per-mode factors exp(i phi(k) dt); each has unit modulus.
std::vector<cplx> propagator_factors(PropagatorKind kind,
                                     std::span<const double> k, double dt);

struct StepOptions {
  bool dealias = true;
  double coupling = 1.0;  // test hook: scales the nonlinearity, 0 = free flow
};

/// Exact free flow over dt (dt may be negative):
///   u_k <- exp(-i k^2 dt) u_k, n+-_k <- exp(+-i <k> dt) n+-_k.
/// Preserves mass and every Sobolev norm of each field.
SimState linear_step(const SimState& state, double dt);

/// Exact flow of the coupled nonlinearity with the linear parts removed.
/// During the subflow |u| and n = n_plus + n_minus are pointwise constant:
///   u <- u exp(i m n |u|^{2(m-1)} dt),
///   n+- <- n+- -+ (i/2) dt A^{-1}(|u|^{2m}).
/// Requires m >= 1 and n_minus = conj(n_plus) to tolerance.
SimState nonlinear_substep(const SimState& state, double dt, double m,
                           const StepOptions& opts = {});

/// Symmetric composition linear(dt/2) . nonlinear(dt) . linear(dt/2);
/// second order in dt. Applies the 2/3-rule filter after the nonlinear
/// substep unless opts.dealias is off.
SimState strang_step(const SimState& state, double dt, double m,
                     const StepOptions& opts = {});

/// In-place variant used by the window integrator.
void strang_step_inplace(SimState& state, double dt, double m,
                         const StepOptions& opts = {});

// --- Picard / Duhamel local solver -----------------------------------------

enum class Quadrature { simpson, gauss_legendre };

struct PicardConfig {
  double delta = 0.25;       // local window, in (0, 1]
  int quad_points = 33;      // time slices on [0, delta]
  int max_iters = 25;
  double fp_tolerance = 1e-10;
  Quadrature quadrature = Quadrature::simpson;
  ExponentSet norm_exponents;  // proxy contraction metric exponents
  StepOptions step;            // coupling hook shared with the splitting path

  void validate() const;
};

/// Complex samples on slices x grid; row t is the field at slice time t.
struct Trajectory {
  GridPtr grid;
  std::vector<double> times;
  std::vector<cplx> values;  // times.size() x grid->num_points(), row-major

  std::span<const cplx> slice(std::size_t t) const {
    const auto n = static_cast<std::size_t>(grid->num_points());
    return {values.data() + t * n, n};
  }
};

struct PicardResult {
  SimState endpoint;
  Trajectory u, n_plus, n_minus;
  std::vector<double> iterate_distances;  // proxy-norm distance per iteration
  std::vector<double> contraction_ratios; // distances[i]/distances[i-1]
  int iterations = 0;
  bool delta_compliant = true;  // delta satisfied the local window conditions
};

/// Error carrying the measured ratio log when the fixed point does not
/// close within max_iters (the signal that delta is too large).
struct PicardNoConvergence : std::runtime_error {
  PicardNoConvergence(std::string msg, std::vector<double> log)
      : std::runtime_error(std::move(msg)), ratio_log(std::move(log)) {}
  std::vector<double> ratio_log;
};

/// Iterates the discrete Duhamel map on cfg.quad_points uniform slices of
/// [0, delta], starting from the free evolution, until successive iterates
/// differ by less than fp_tolerance in the proxy norm
/// ||.||_{X^{0,b1}} + ||.||_{X^{1/2,b2},+-}. Warns (via delta_compliant)
/// rather than refusing when delta violates the window conditions.
PicardResult picard_local_solve(const SimState& state, const PicardConfig& cfg,
                                double m);

} // namespace klsm

#endif
