#include "doctest.h"

#include <cmath>

#include "klsm/diagnostics.hpp"
#include "klsm/evolve.hpp"
#include "test_util.hpp"

using namespace klsm;
namespace tu = klsm::testutil;

namespace {

SimState small_gaussian_state(const GridPtr& g, double au = 0.4,
                              double an = 0.3) {
  auto u = tu::gaussian(g, au, 2.0);
  auto n0 = tu::gaussian(g, an, 3.0);
  SpectralField zero(g);
  auto [p, m] = decompose_n(n0, zero);
  return SimState(u, p, m, 0.0);
}

PicardConfig base_config(double delta) {
  PicardConfig cfg;
  cfg.delta = delta;
  cfg.norm_exponents = bourgain_exponents(Rational(1), Rational(1, 5));
  return cfg;
}

} // namespace

TEST_CASE("picard config validation") {
  auto cfg = base_config(0.25);
  CHECK_NOTHROW(cfg.validate());
  cfg.delta = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.delta = 1.5;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = base_config(0.25);
  cfg.quad_points = 7;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = base_config(0.25);
  cfg.fp_tolerance = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("picard: zero coupling fixes the free flow in one iteration") {
  auto g = make_grid(64, 30.0);
  auto state = small_gaussian_state(g);
  auto cfg = base_config(0.25);
  cfg.step.coupling = 0.0;
  auto result = picard_local_solve(state, cfg, 1.0);
  CHECK(result.iterations == 1);
  CHECK(result.iterate_distances.back() == 0.0);
  CHECK(result.contraction_ratios.empty());

  // endpoint equals the exact free evolution
  auto free_end = linear_step(state, cfg.delta);
  CHECK(tu::rel_diff(result.endpoint.u, free_end.u) <= 1e-12);
  CHECK(tu::rel_diff(result.endpoint.n_plus, free_end.n_plus) <= 1e-12);
}

TEST_CASE("picard: compliant window contracts at ratio <= 1/2") {
  auto g = make_grid(128, 40.0);
  auto state = small_gaussian_state(g);
  const auto exps = bourgain_exponents(Rational(1), Rational(1, 5));
  const double delta =
      local_delta(mass(state.u), sobolev_norm(state.n_plus, 0.5), exps, 2.0);
  auto cfg = base_config(std::min(delta, 1.0));
  cfg.norm_exponents = exps;
  auto result = picard_local_solve(state, cfg, 1.0);
  CHECK(result.delta_compliant);
  REQUIRE(!result.contraction_ratios.empty());
  for (const double r : result.contraction_ratios) CHECK(r <= 0.5);
}

TEST_CASE("picard: endpoint matches the splitting integrator") {
  auto g = make_grid(128, 40.0);
  auto state = small_gaussian_state(g);
  auto cfg = base_config(0.25);
  auto result = picard_local_solve(state, cfg, 1.0);

  SimState split = state;
  const int steps = cfg.quad_points;
  const double dt = cfg.delta / steps;
  for (int i = 0; i < steps; ++i) strang_step_inplace(split, dt, 1.0);

  double dist = 0.0;
  for (std::size_t j = 0; j < split.u.physical().size(); ++j)
    dist = std::max(dist,
                    std::abs(split.u.physical()[j] -
                             result.endpoint.u.physical()[j]));
  const double bound = std::max(10.0 * cfg.fp_tolerance, 50.0 * dt * dt);
  CHECK(dist <= bound);
}

TEST_CASE("picard: quadrature choices agree") {
  auto g = make_grid(64, 30.0);
  auto state = small_gaussian_state(g);
  auto cfg = base_config(0.25);
  auto simpson = picard_local_solve(state, cfg, 1.0);
  cfg.quadrature = Quadrature::gauss_legendre;
  auto gauss = picard_local_solve(state, cfg, 1.0);
  CHECK(tu::rel_diff(simpson.endpoint.u, gauss.endpoint.u) <= 1e-7);
}

TEST_CASE("picard: oversized window fails with the ratio log attached") {
  auto g = make_grid(64, 30.0);
  auto state = small_gaussian_state(g, 6.0, 5.0);  // large data
  auto cfg = base_config(0.999);
  cfg.max_iters = 8;
  try {
    picard_local_solve(state, cfg, 1.0);
    FAIL("expected PicardNoConvergence");
  } catch (const PicardNoConvergence& e) {
    CHECK(!e.ratio_log.empty());
    CHECK(e.ratio_log.back() > 0.5);
  }
}
