#include "klsm/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace klsm::fft {

namespace {

// Separate in-place and out-of-place plans: new-array execution must keep
// the same in-place relationship the plan was created with.
struct PlanSet {
  fftw_plan fwd_oop = nullptr;
  fftw_plan bwd_oop = nullptr;
  fftw_plan fwd_ip = nullptr;
  fftw_plan bwd_ip = nullptr;
};

std::mutex g_plan_mutex;

fftw_complex* as_fftw(cplx* p) { return reinterpret_cast<fftw_complex*>(p); }

PlanSet make_plans_1d(std::size_t n) {
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  std::vector<cplx> a(n), b(n);
  PlanSet s;
  s.fwd_oop = fftw_plan_dft_1d(static_cast<int>(n), as_fftw(a.data()),
                               as_fftw(b.data()), FFTW_FORWARD, flags);
  s.bwd_oop = fftw_plan_dft_1d(static_cast<int>(n), as_fftw(a.data()),
                               as_fftw(b.data()), FFTW_BACKWARD, flags);
  s.fwd_ip = fftw_plan_dft_1d(static_cast<int>(n), as_fftw(a.data()),
                              as_fftw(a.data()), FFTW_FORWARD, flags);
  s.bwd_ip = fftw_plan_dft_1d(static_cast<int>(n), as_fftw(a.data()),
                              as_fftw(a.data()), FFTW_BACKWARD, flags);
  if (!s.fwd_oop || !s.bwd_oop || !s.fwd_ip || !s.bwd_ip)
    throw std::runtime_error("fftw planning failed");
  return s;
}

PlanSet make_plans_2d(std::size_t rows, std::size_t cols) {
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  std::vector<cplx> a(rows * cols), b(rows * cols);
  PlanSet s;
  const int r = static_cast<int>(rows), c = static_cast<int>(cols);
  s.fwd_oop = fftw_plan_dft_2d(r, c, as_fftw(a.data()), as_fftw(b.data()),
                               FFTW_FORWARD, flags);
  s.bwd_oop = fftw_plan_dft_2d(r, c, as_fftw(a.data()), as_fftw(b.data()),
                               FFTW_BACKWARD, flags);
  s.fwd_ip = fftw_plan_dft_2d(r, c, as_fftw(a.data()), as_fftw(a.data()),
                              FFTW_FORWARD, flags);
  s.bwd_ip = fftw_plan_dft_2d(r, c, as_fftw(a.data()), as_fftw(a.data()),
                              FFTW_BACKWARD, flags);
  if (!s.fwd_oop || !s.bwd_oop || !s.fwd_ip || !s.bwd_ip)
    throw std::runtime_error("fftw planning failed");
  return s;
}

const PlanSet& get_plans_1d(std::size_t n) {
  static std::map<std::size_t, PlanSet> cache;
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_plans_1d(n)).first;
  return it->second;
}

const PlanSet& get_plans_2d(std::size_t rows, std::size_t cols) {
  static std::map<std::pair<std::size_t, std::size_t>, PlanSet> cache;
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  const auto key = std::make_pair(rows, cols);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, make_plans_2d(rows, cols)).first;
  return it->second;
}

void execute(const PlanSet& s, bool forward_dir, std::span<const cplx> in,
             std::span<cplx> out) {
  const bool in_place = in.data() == out.data();
  fftw_plan plan = forward_dir ? (in_place ? s.fwd_ip : s.fwd_oop)
                               : (in_place ? s.bwd_ip : s.bwd_oop);
  // Out-of-place c2c leaves the input untouched.
  fftw_execute_dft(plan, as_fftw(const_cast<cplx*>(in.data())),
                   as_fftw(out.data()));
}

void normalize(std::span<cplx> v, double factor) {
  for (auto& z : v) z *= factor;
}

} // namespace

void forward(std::span<const cplx> in, std::span<cplx> out) {
  if (in.size() != out.size()) throw std::invalid_argument("fft: size mismatch");
  execute(get_plans_1d(in.size()), true, in, out);
  normalize(out, 1.0 / static_cast<double>(in.size()));
}

void inverse(std::span<const cplx> in, std::span<cplx> out) {
  if (in.size() != out.size()) throw std::invalid_argument("fft: size mismatch");
  execute(get_plans_1d(in.size()), false, in, out);
}

void forward_2d(std::span<const cplx> in, std::span<cplx> out, std::size_t rows,
                std::size_t cols) {
  if (in.size() != rows * cols || out.size() != rows * cols)
    throw std::invalid_argument("fft2d: size mismatch");
  execute(get_plans_2d(rows, cols), true, in, out);
  normalize(out, 1.0 / static_cast<double>(rows * cols));
}

void inverse_2d(std::span<const cplx> in, std::span<cplx> out, std::size_t rows,
                std::size_t cols) {
  if (in.size() != rows * cols || out.size() != rows * cols)
    throw std::invalid_argument("fft2d: size mismatch");
  execute(get_plans_2d(rows, cols), false, in, out);
}

} // namespace klsm::fft
