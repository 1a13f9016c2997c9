#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "klsm/diagnostics.hpp"
#include "test_util.hpp"

using namespace klsm;
namespace tu = klsm::testutil;

TEST_CASE("mass: zero field and plane wave") {
  auto g = make_grid(64, 50.0);
  SpectralField zero(g);
  CHECK(mass(zero) == 0.0);

  auto wave = tu::plane_wave(g, 3, cplx(1.0, 0.0));
  CHECK(mass(wave) == doctest::Approx(std::sqrt(50.0)).epsilon(1e-12));
}

TEST_CASE("sobolev_norm: s = 0 equals mass; plane wave formula") {
  auto g = make_grid(128, 40.0);
  std::mt19937_64 rng(21);
  auto f = tu::random_field(g, rng);
  CHECK(sobolev_norm(f, 0.0) == doctest::Approx(mass(f)).epsilon(1e-13));
  CHECK(sobolev_norm(SpectralField(g), 1.0) == 0.0);

  const int mode = 7;
  const double a = 0.6;
  auto wave = tu::plane_wave(g, mode, cplx(a, 0.0));
  const double k0 = 2.0 * std::numbers::pi * mode / g->length();
  for (double s : {-0.5, 0.5, 1.0}) {
    const double expected = a * std::sqrt(40.0) * std::pow(1.0 + k0 * k0, s / 2);
    CHECK(sobolev_norm(wave, s) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("sobolev_norm: summation oracle on random fields") {
  auto g = make_grid(64, 30.0);
  std::mt19937_64 rng(22);
  auto f = tu::random_field(g, rng);
  for (double s : {-0.5, 0.25, 1.0}) {
    long double acc = 0.0L;
    const auto spec = f.spectrum();
    const auto k = g->wavenumbers();
    for (std::size_t j = 0; j < spec.size(); ++j)
      acc += std::pow(1.0 + k[j] * k[j], s) * std::norm(spec[j]);
    const double expected = std::sqrt(30.0 * static_cast<double>(acc));
    CHECK(sobolev_norm(f, s) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("energy: zero fields and free Klein-Gordon quadratic form") {
  auto g = make_grid(128, 50.0);
  SpectralField zero(g);
  CHECK(energy(zero, zero, zero, 1.0) == 0.0);

  // n = cos(k0 x) scaled to unit L2 norm, u = 0, n_t = 0
  const int mode = 4;
  const double k0 = 2.0 * std::numbers::pi * mode / g->length();
  std::vector<cplx> c(static_cast<std::size_t>(g->num_points()));
  for (int j = 0; j < g->num_points(); ++j)
    c[static_cast<std::size_t>(j)] = std::cos(k0 * g->x(j));
  auto n = SpectralField::from_physical(g, c);
  const double scale = 1.0 / mass(n);
  for (auto& z : n.mutable_physical()) z *= scale;

  const double expected = 0.5 * (1.0 + k0 * k0);
  CHECK(energy(zero, n, zero, 1.0) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("energy: rejects non-real n") {
  auto g = make_grid(64, 30.0);
  std::mt19937_64 rng(23);
  auto complex_field = tu::random_field(g, rng);
  SpectralField zero(g);
  CHECK_THROWS_AS(energy(zero, complex_field, zero, 1.0),
                  std::invalid_argument);
}

TEST_CASE("n norms agree between reconstruct path and stored fields") {
  auto g = make_grid(128, 40.0);
  std::mt19937_64 rng(24);
  auto n0 = tu::random_real_field(g, rng);
  auto n1 = tu::random_real_field(g, rng);
  auto [p, m] = decompose_n(n0, n1);
  auto [n, nt] = reconstruct_n(p, m);
  CHECK(sobolev_norm(n, 0.5) ==
        doctest::Approx(sobolev_norm(n0, 0.5)).epsilon(1e-12));
  CHECK(sobolev_norm(nt, -0.5) ==
        doctest::Approx(sobolev_norm(n1, -0.5)).epsilon(1e-12));
}

TEST_CASE("growth_bound_check: free wave, doubling flag, violations") {
  // Synthetic constant history: free-wave behaviour. c_front = 1 suffices.
  std::vector<DiagnosticsRow> history;
  for (int i = 0; i <= 10; ++i) {
    DiagnosticsRow row;
    row.time = i;
    row.n_half = 2.0;
    row.nt_minus_half = 1.0;
    history.push_back(row);
  }
  auto bound = make_growth_bound(0.5, 1.0, 2.0, 1.0, 0.0, 1.0);
  CHECK(bound.baseline == 3.0);
  auto report = growth_bound_check(history, bound, 0.0, 1.0);
  CHECK(report.violations.empty());
  CHECK(report.fit.found);
  CHECK(report.fit.c_front == doctest::Approx(1.0));
  CHECK(report.first_doubling_row == -1);

  // Doubling exactly when n_half + nt crosses twice the initial value.
  history[7].n_half = 5.1; // 5.1 + 1.0 >= 6.0
  auto report2 = growth_bound_check(history, bound, 0.0, 1.0);
  CHECK(report2.first_doubling_row == 7);

  // A fixed pair that the history violates is flagged.
  GrowthBound tight = bound;
  tight.baseline = 1.0;
  auto report3 = growth_bound_check(history, tight, 0.0, 1.0);
  CHECK(!report3.violations.empty());

  // Unsorted history is rejected.
  std::swap(history[2], history[5]);
  CHECK_THROWS_AS(growth_bound_check(history, bound, 0.0, 1.0),
                  std::invalid_argument);
}

TEST_CASE("diagnostics CSV row format is stable") {
  DiagnosticsRow row;
  row.time = 0.5;
  row.mass = 1.0;
  row.energy = -2.25;
  row.n_half = 3.0;
  row.nt_minus_half = 0.125;
  row.bound_value = 8.0;
  row.doubled = true;
  CHECK(diagnostics_csv_header() ==
        "t,mass,energy,n_half,nt_minus_half,bound_value,doubled");
  CHECK(diagnostics_csv_row(row) == "0.5,1,-2.25,3,0.125,8,1");
}
