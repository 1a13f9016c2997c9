#ifndef KLSM_KERNELS_HPP
#define KLSM_KERNELS_HPP

#include <complex>
#include <cstddef>

// Hot inner loops, each in two variants: a plain serial reference and an
// OpenMP version. The OpenMP reductions use a fixed chunk decomposition so
// the result does not depend on thread count or schedule. The dispatching
// entry points pick the variant from the process-wide execution mode.

namespace klsm::kernels {

using cplx = std::complex<double>;

enum class ExecMode { serial, parallel };

// Default is parallel when built with OpenMP, serial otherwise.
void set_exec_mode(ExecMode mode);
ExecMode exec_mode();

// --- pointwise maps ------------------------------------------------------

// a[i] *= f[i]
void multiply_pointwise_serial(cplx* a, const cplx* f, std::size_t n);
void multiply_pointwise_omp(cplx* a, const cplx* f, std::size_t n);
void multiply_pointwise(cplx* a, const cplx* f, std::size_t n);

// a[i] *= w[i]
void scale_pointwise_serial(cplx* a, const double* w, std::size_t n);
void scale_pointwise_omp(cplx* a, const double* w, std::size_t n);
void scale_pointwise(cplx* a, const double* w, std::size_t n);

// Pointwise Yukawa subflow update: rotates u[i] by
// exp(i * coupling * m * n[i] * (|u[i]|^2)^(m-1) * dt) and writes the wave
// source |u[i]|^(2m) into source_out (may be null when not needed).
void yukawa_rotate_serial(cplx* u, const double* n, double* source_out,
                          std::size_t npts, double m, double dt, double coupling);
void yukawa_rotate_omp(cplx* u, const double* n, double* source_out,
                       std::size_t npts, double m, double dt, double coupling);
void yukawa_rotate(cplx* u, const double* n, double* source_out,
                   std::size_t npts, double m, double dt, double coupling);

// --- reductions -----------------------------------------------------------

// sum_i w[i] * |v[i]|^2 ; w == nullptr means all-ones weights.
double weighted_abs2_sum_serial(const cplx* v, const double* w, std::size_t n);
double weighted_abs2_sum_omp(const cplx* v, const double* w, std::size_t n);
double weighted_abs2_sum(const cplx* v, const double* w, std::size_t n);

// Space-time spectral weight accumulation over an ntimes x npts coefficient
// matrix (row-major, row = one temporal frequency):
//   sum_{t,k} kw[k] * (1 + (tau[t] - phi[k])^2)^b * |c[t*npts + k]|^2
// kw carries the spatial weight <k>^{2s}.
double xsb_weighted_sum_serial(const cplx* c, std::size_t ntimes, std::size_t npts,
                               const double* kw, const double* phi,
                               const double* tau, double b);
double xsb_weighted_sum_omp(const cplx* c, std::size_t ntimes, std::size_t npts,
                            const double* kw, const double* phi,
                            const double* tau, double b);
double xsb_weighted_sum(const cplx* c, std::size_t ntimes, std::size_t npts,
                        const double* kw, const double* phi,
                        const double* tau, double b);

} // namespace klsm::kernels

#endif
