#include "doctest.h"

#include <cstring>
#include <random>
#include <vector>

#include "klsm/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace klsm::kernels;
using klsm::kernels::cplx;

namespace {

std::vector<cplx> random_vec(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d(0.0, 1.0);
  std::vector<cplx> v(n);
  for (auto& z : v) z = cplx(d(rng), d(rng));
  return v;
}

std::vector<double> random_real(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d(0.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

} // namespace

TEST_CASE("pointwise kernels: omp matches serial exactly") {
  const std::size_t n = 4097;
  auto a1 = random_vec(n, 1);
  auto a2 = a1;
  const auto f = random_vec(n, 2);
  multiply_pointwise_serial(a1.data(), f.data(), n);
  multiply_pointwise_omp(a2.data(), f.data(), n);
  CHECK(std::memcmp(a1.data(), a2.data(), n * sizeof(cplx)) == 0);

  auto b1 = random_vec(n, 3);
  auto b2 = b1;
  const auto w = random_real(n, 4);
  scale_pointwise_serial(b1.data(), w.data(), n);
  scale_pointwise_omp(b2.data(), w.data(), n);
  CHECK(std::memcmp(b1.data(), b2.data(), n * sizeof(cplx)) == 0);
}

TEST_CASE("yukawa_rotate: variants agree, modulus preserved, source correct") {
  const std::size_t n = 2048;
  auto u1 = random_vec(n, 5);
  auto u2 = u1;
  const auto u0 = u1;
  const auto nv = random_real(n, 6);
  std::vector<double> s1(n), s2(n);
  const double m = 1.5, dt = 0.01, coupling = 1.0;
  yukawa_rotate_serial(u1.data(), nv.data(), s1.data(), n, m, dt, coupling);
  yukawa_rotate_omp(u2.data(), nv.data(), s2.data(), n, m, dt, coupling);
  CHECK(std::memcmp(u1.data(), u2.data(), n * sizeof(cplx)) == 0);
  CHECK(std::memcmp(s1.data(), s2.data(), n * sizeof(double)) == 0);

  for (std::size_t i = 0; i < n; i += 97) {
    CHECK(std::abs(std::abs(u1[i]) - std::abs(u0[i])) <= 1e-13);
    CHECK(s1[i] == doctest::Approx(std::pow(std::norm(u0[i]), m)).epsilon(1e-12));
  }
}

TEST_CASE("yukawa_rotate: zero samples follow the continuous extension") {
  cplx u[2] = {cplx(0.0, 0.0), cplx(0.0, 0.0)};
  double nv[2] = {2.0, 2.0};
  double src[2];
  yukawa_rotate_serial(u, nv, src, 2, 1.0, 0.1, 1.0); // m = 1: (|u|^2)^0 := 1
  CHECK(u[0] == cplx(0.0, 0.0));
  CHECK(src[0] == 0.0);
  yukawa_rotate_serial(u, nv, src, 2, 1.5, 0.1, 1.0); // m > 1: weight 0
  CHECK(u[0] == cplx(0.0, 0.0));
  CHECK(src[0] == 0.0);
}

TEST_CASE("reductions: chunked omp close to serial, exact vs long double") {
  const std::size_t n = 100003;
  const auto v = random_vec(n, 7);
  const auto w = random_real(n, 8);

  const double serial = weighted_abs2_sum_serial(v.data(), w.data(), n);
  const double omp = weighted_abs2_sum_omp(v.data(), w.data(), n);
  CHECK(omp == doctest::Approx(serial).epsilon(1e-13));

  long double ref = 0.0L;
  for (std::size_t i = 0; i < n; ++i)
    ref += static_cast<long double>(w[i]) * std::norm(v[i]);
  CHECK(serial == doctest::Approx(static_cast<double>(ref)).epsilon(1e-12));
}

TEST_CASE("reductions: result independent of thread count") {
#ifdef _OPENMP
  const std::size_t n = 65537;
  const auto v = random_vec(n, 9);
  const auto w = random_real(n, 10);

  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const double r1 = weighted_abs2_sum_omp(v.data(), w.data(), n);
  omp_set_num_threads(3);
  const double r3 = weighted_abs2_sum_omp(v.data(), w.data(), n);
  omp_set_num_threads(7);
  const double r7 = weighted_abs2_sum_omp(v.data(), w.data(), n);
  omp_set_num_threads(saved);
  CHECK(r1 == r3);
  CHECK(r1 == r7);
#endif
}

TEST_CASE("xsb weighted sum: variants agree and match direct evaluation") {
  const std::size_t nt = 37, nx = 65;
  const auto c = random_vec(nt * nx, 11);
  const auto kw = random_real(nx, 12);
  auto phi = random_real(nx, 13);
  auto tau = random_real(nt, 14);

  const double b = -0.3;
  const double serial =
      xsb_weighted_sum_serial(c.data(), nt, nx, kw.data(), phi.data(),
                              tau.data(), b);
  const double omp = xsb_weighted_sum_omp(c.data(), nt, nx, kw.data(),
                                          phi.data(), tau.data(), b);
  CHECK(omp == doctest::Approx(serial).epsilon(1e-13));

  long double ref = 0.0L;
  for (std::size_t t = 0; t < nt; ++t)
    for (std::size_t k = 0; k < nx; ++k) {
      const double d = tau[t] - phi[k];
      ref += kw[k] * std::pow(1.0 + d * d, b) * std::norm(c[t * nx + k]);
    }
  CHECK(serial == doctest::Approx(static_cast<double>(ref)).epsilon(1e-12));
}

TEST_CASE("exec mode dispatch") {
  const auto saved = exec_mode();
  set_exec_mode(ExecMode::serial);
  CHECK(exec_mode() == ExecMode::serial);
  set_exec_mode(ExecMode::parallel);
  CHECK(exec_mode() == ExecMode::parallel);
  set_exec_mode(saved);
}
