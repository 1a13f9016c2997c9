#ifndef KLSM_FFT_HPP
#define KLSM_FFT_HPP

#include <complex>
#include <cstddef>
#include <span>

// Thin wrapper over FFTW with an internally synchronized plan cache.
// Plans are created with FFTW_ESTIMATE so planning is deterministic, and
// with FFTW_UNALIGNED so they apply to any caller buffer. Execution through
// cached plans is safe from multiple threads on disjoint buffers.
//
// Normalization: the forward transform carries 1/n, so a pure mode
// exp(2*pi*i*j*m/n) has unit coefficient at bin m. The inverse carries no
// factor.

namespace klsm::fft {

using cplx = std::complex<double>;

void forward(std::span<const cplx> in, std::span<cplx> out);
void inverse(std::span<const cplx> in, std::span<cplx> out);

// 2-D transforms over row-major rows x cols data; same 1/(rows*cols)
// forward normalization.
void forward_2d(std::span<const cplx> in, std::span<cplx> out,
                std::size_t rows, std::size_t cols);
void inverse_2d(std::span<const cplx> in, std::span<cplx> out,
                std::size_t rows, std::size_t cols);

} // namespace klsm::fft

#endif
