#ifndef KLSM_EXPONENTS_HPP
#define KLSM_EXPONENTS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "klsm/rational.hpp"

// Exact exponent algebra for the coupled Schrodinger / half-wave system with
// nonlinearity power m in [1, 2): critical Sobolev indices of the four
// truncated dilations, the modulation exponents b1 = b2 = (2m-1)/(4m) + eps
// and b1' = b2' = -1/2 + 2m*eps, the admissible (theta, eps) region, and the
// local window / iteration-count formulas driving the global scheduler.
// Everything here is exact rational arithmetic; floating point enters only
// where exponent sets meet measured norms.

namespace klsm {

struct ExponentSet {
  Rational m;
  Rational epsilon;
  Rational theta;
  Rational b1, b2;
  Rational b1p, b2p;
  bool endpoint_b = false;  // eps == 1/(4m): b1 = 1/2, b1p = 0 exactly
  bool theta_feasible = true;

  /// m + 1/2 + b2p - (2m-1) b1 - b2; equals 1/2 for every valid set.
  Rational gap() const;
};

enum class ScalingCase {
  drop_laplacian_u,
  drop_dt_u,
  drop_halfwave_n,
  drop_dt_n,
};

std::string to_string(ScalingCase c);

struct CriticalIndices {
  Rational k;  // Sobolev index for u
  Rational l;  // Sobolev index for n
  ScalingCase case_tag;
};

/// Closed-form critical indices of the dilation that survives when the named
/// term is dropped from the system. Requires m >= 1, d >= 1.
CriticalIndices critical_indices(const Rational& m, int d, ScalingCase c);

/// Builds the exponent set for admissible (m, epsilon):
/// 1 <= m < 2, 0 < epsilon < 1 - m/2, epsilon <= 1/(4m).
/// Equality epsilon = 1/(4m) is accepted and flagged (endpoint_b).
/// theta defaults to the midpoint of the feasible theta interval at this
/// epsilon when nonempty (theta_feasible records which).
ExponentSet bourgain_exponents(const Rational& m, const Rational& epsilon);
ExponentSet bourgain_exponents(const Rational& m, const Rational& epsilon,
                               const Rational& theta);

/// One linear constraint a_theta * theta + a_eps * eps (<|<=) rhs.
struct RegionConstraint {
  Rational a_theta;
  Rational a_eps;
  Rational rhs;
  bool strict;
  std::string name;
};

struct RegionVertex {
  Rational theta;
  Rational eps;
  std::vector<int> active;  // indices of constraints met with equality
};

struct RegionReport {
  Rational m;
  std::vector<RegionConstraint> constraints;
  bool feasible = false;  // the open region contains a point
  std::optional<std::array<Rational, 2>> witness;  // (theta, eps), interior
  std::vector<RegionVertex> vertices;  // closure polygon, CCW from centroid
};

/// Constraint list for power m:
///   theta > 0, eps > 0, eps < 1 - m/2, eps <= 1/(4m),
///   theta + 2 eps < 2 - m, theta - 4m eps < m + 1/(2m) - 2.
/// Feasibility decided by exact vertex enumeration of the closure; an
/// infeasible region is a valid report, not an error.
RegionReport admissible_region(const Rational& m);

/// True when (theta, eps) satisfies every constraint (strict ones strictly).
bool region_contains(const RegionReport& region, const Rational& theta,
                     const Rational& eps);

/// Local window from the three delta-conditions: with every combined
/// exponent equal to gap() = 1/2, delta = min over Q of (c_local * Q)^(-2)
/// with Q in { ||u0||^{2m-1}, ||u0||^{2m-2} ||n(0)||, ||u0||^{2m} / ||n(0)|| },
/// capped at 1. Zero u0 decouples the system: delta = 1.
double local_delta(double mass_u0, double n_half_norm, const ExponentSet& exps,
                   double c_local);

struct DoublingForecast {
  bool applicable = false;  // regime ||n(0)|| >= ||u0||^{2m} holds
  bool free_wave = false;   // u0 = 0: no doubling ever
  double delta = 0.0;
  long long iterations = 0;  // N
  double advance = 0.0;      // N * delta (infinite for free_wave)
  double c_star = 0.0;       // advance * mass^{4m-2} lies in [1/c*, c*]
};

/// Iteration schedule before the wave norm can double:
/// N = ceil(n / (delta^{1/2} u^{2m})), advance = N * delta.
DoublingForecast doubling_forecast(double mass_u0, double n_half_norm,
                                   const ExponentSet& exps, double c_local);

} // namespace klsm

#endif
