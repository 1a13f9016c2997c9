#include "klsm/kernels.hpp"

#include <atomic>
#include <cmath>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace klsm::kernels {

namespace {

#ifdef _OPENMP
std::atomic<ExecMode> g_mode{ExecMode::parallel};
#else
std::atomic<ExecMode> g_mode{ExecMode::serial};
#endif

// Fixed number of reduction chunks, independent of thread count, so the
// partial-sum combination order never changes.
constexpr std::size_t kChunks = 64;

inline std::size_t chunk_begin(std::size_t n, std::size_t c) {
  return n * c / kChunks;
}

} // namespace

void set_exec_mode(ExecMode mode) { g_mode.store(mode); }
ExecMode exec_mode() { return g_mode.load(); }

// --- pointwise maps --------------------------------------------------------

void multiply_pointwise_serial(cplx* a, const cplx* f, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) a[i] *= f[i];
}

void multiply_pointwise_omp(cplx* a, const cplx* f, std::size_t n) {
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(n); ++i)
    a[i] *= f[i];
}

void multiply_pointwise(cplx* a, const cplx* f, std::size_t n) {
  if (exec_mode() == ExecMode::parallel)
    multiply_pointwise_omp(a, f, n);
  else
    multiply_pointwise_serial(a, f, n);
}

void scale_pointwise_serial(cplx* a, const double* w, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) a[i] *= w[i];
}

void scale_pointwise_omp(cplx* a, const double* w, std::size_t n) {
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(n); ++i)
    a[i] *= w[i];
}

void scale_pointwise(cplx* a, const double* w, std::size_t n) {
  if (exec_mode() == ExecMode::parallel)
    scale_pointwise_omp(a, w, n);
  else
    scale_pointwise_serial(a, w, n);
}

namespace {

inline void yukawa_rotate_one(cplx& u, double nval, double* src, double m,
                              double dt, double coupling) {
  const double abs2 = std::norm(u);
  // (|u|^2)^(m-1): continuous extension gives 1 at u=0, m=1 and 0 for m>1,
  // which is exactly what std::pow(0,0)=1, std::pow(0,+)=0 produce.
  const double amp = std::pow(abs2, m - 1.0);
  const double phase = coupling * m * nval * amp * dt;
  u *= cplx(std::cos(phase), std::sin(phase));
  if (src) *src = abs2 * amp; // |u|^{2m} = |u|^2 * (|u|^2)^{m-1}
}

} // namespace

void yukawa_rotate_serial(cplx* u, const double* n, double* source_out,
                          std::size_t npts, double m, double dt,
                          double coupling) {
  for (std::size_t i = 0; i < npts; ++i)
    yukawa_rotate_one(u[i], n[i], source_out ? source_out + i : nullptr, m, dt,
                      coupling);
}

void yukawa_rotate_omp(cplx* u, const double* n, double* source_out,
                       std::size_t npts, double m, double dt, double coupling) {
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(npts); ++i)
    yukawa_rotate_one(u[i], n[i], source_out ? source_out + i : nullptr, m, dt,
                      coupling);
}

void yukawa_rotate(cplx* u, const double* n, double* source_out,
                   std::size_t npts, double m, double dt, double coupling) {
  if (exec_mode() == ExecMode::parallel)
    yukawa_rotate_omp(u, n, source_out, npts, m, dt, coupling);
  else
    yukawa_rotate_serial(u, n, source_out, npts, m, dt, coupling);
}

// --- reductions --------------------------------------------------------------

double weighted_abs2_sum_serial(const cplx* v, const double* w, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    acc += (w ? w[i] : 1.0) * std::norm(v[i]);
  return acc;
}

double weighted_abs2_sum_omp(const cplx* v, const double* w, std::size_t n) {
  double partial[kChunks] = {};
#pragma omp parallel for schedule(static)
  for (long long c = 0; c < static_cast<long long>(kChunks); ++c) {
    const std::size_t lo = chunk_begin(n, static_cast<std::size_t>(c));
    const std::size_t hi = chunk_begin(n, static_cast<std::size_t>(c) + 1);
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i)
      acc += (w ? w[i] : 1.0) * std::norm(v[i]);
    partial[c] = acc;
  }
  double acc = 0.0;
  for (std::size_t c = 0; c < kChunks; ++c) acc += partial[c];
  return acc;
}

double weighted_abs2_sum(const cplx* v, const double* w, std::size_t n) {
  return exec_mode() == ExecMode::parallel ? weighted_abs2_sum_omp(v, w, n)
                                           : weighted_abs2_sum_serial(v, w, n);
}

namespace {

inline double xsb_row_sum(const cplx* row, std::size_t npts, const double* kw,
                          const double* phi, double tau, double b) {
  double acc = 0.0;
  for (std::size_t k = 0; k < npts; ++k) {
    const double d = tau - phi[k];
    acc += kw[k] * std::pow(1.0 + d * d, b) * std::norm(row[k]);
  }
  return acc;
}

} // namespace

double xsb_weighted_sum_serial(const cplx* c, std::size_t ntimes,
                               std::size_t npts, const double* kw,
                               const double* phi, const double* tau, double b) {
  double acc = 0.0;
  for (std::size_t t = 0; t < ntimes; ++t)
    acc += xsb_row_sum(c + t * npts, npts, kw, phi, tau[t], b);
  return acc;
}

double xsb_weighted_sum_omp(const cplx* c, std::size_t ntimes, std::size_t npts,
                            const double* kw, const double* phi,
                            const double* tau, double b) {
  std::vector<double> row_sums(ntimes);
#pragma omp parallel for schedule(static)
  for (long long t = 0; t < static_cast<long long>(ntimes); ++t)
    row_sums[t] = xsb_row_sum(c + t * npts, npts, kw, phi, tau[t], b);
  double acc = 0.0;
  for (std::size_t t = 0; t < ntimes; ++t) acc += row_sums[t];
  return acc;
}

double xsb_weighted_sum(const cplx* c, std::size_t ntimes, std::size_t npts,
                        const double* kw, const double* phi, const double* tau,
                        double b) {
  return exec_mode() == ExecMode::parallel
             ? xsb_weighted_sum_omp(c, ntimes, npts, kw, phi, tau, b)
             : xsb_weighted_sum_serial(c, ntimes, npts, kw, phi, tau, b);
}

} // namespace klsm::kernels
