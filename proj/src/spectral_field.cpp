#include "klsm/spectral_field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "klsm/fft.hpp"
#include "klsm/kernels.hpp"

namespace klsm {

namespace {

void require_same_grid(const SpectralField& a, const SpectralField& b,
                       const char* what) {
  if (!(a.grid() == b.grid()))
    throw std::invalid_argument(std::string(what) + ": grid mismatch");
}

void require_finite(const SpectralField& f, const char* what) {
  const int bad = f.first_bad_index();
  if (bad >= 0)
    throw std::invalid_argument(std::string(what) +
                                ": non-finite value at physical index " +
                                std::to_string(bad));
}

void require_real(const SpectralField& f, const char* what) {
  double amp = 0.0, imag = 0.0;
  for (const cplx& z : f.physical()) {
    amp = std::max(amp, std::abs(z));
    imag = std::max(imag, std::abs(z.imag()));
  }
  if (imag > 1e-12 * std::max(amp, 1.0))
    throw std::invalid_argument(std::string(what) +
                                ": field is not real-valued (max imag " +
                                std::to_string(imag) + ")");
}

} // namespace

SpectralField::SpectralField(GridPtr grid)
    : grid_(std::move(grid)),
      physical_(static_cast<std::size_t>(grid_->num_points())),
      spectrum_(static_cast<std::size_t>(grid_->num_points())) {}

SpectralField SpectralField::from_physical(GridPtr grid,
                                           std::vector<cplx> values) {
  SpectralField f(std::move(grid));
  if (values.size() != static_cast<std::size_t>(f.size()))
    throw std::invalid_argument("from_physical: length mismatch");
  f.physical_ = std::move(values);
  f.physical_valid_ = true;
  f.spectrum_valid_ = false;
  return f;
}

SpectralField SpectralField::from_spectrum(GridPtr grid,
                                           std::vector<cplx> spectrum) {
  SpectralField f(std::move(grid));
  if (spectrum.size() != static_cast<std::size_t>(f.size()))
    throw std::invalid_argument("from_spectrum: length mismatch");
  f.spectrum_ = std::move(spectrum);
  f.spectrum_valid_ = true;
  f.physical_valid_ = false;
  return f;
}

void SpectralField::sync_physical() const {
  if (physical_valid_) return;
  fft::inverse(spectrum_, physical_);
  physical_valid_ = true;
}

void SpectralField::sync_spectrum() const {
  if (spectrum_valid_) return;
  fft::forward(physical_, spectrum_);
  spectrum_valid_ = true;
}

std::span<const cplx> SpectralField::physical() const {
  sync_physical();
  return physical_;
}

std::span<const cplx> SpectralField::spectrum() const {
  sync_spectrum();
  return spectrum_;
}

std::vector<cplx>& SpectralField::mutable_physical() {
  sync_physical();
  spectrum_valid_ = false;
  return physical_;
}

std::vector<cplx>& SpectralField::mutable_spectrum() {
  sync_spectrum();
  physical_valid_ = false;
  return spectrum_;
}

bool SpectralField::finite() const { return first_bad_index() < 0; }

int SpectralField::first_bad_index() const {
  const auto& v = physical_valid_ ? physical_ : spectrum_;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag()))
      return static_cast<int>(i);
  return -1;
}

double SpectralField::max_abs() const {
  double m = 0.0;
  for (const cplx& z : physical()) m = std::max(m, std::abs(z));
  return m;
}

double SimState::reality_defect() const {
  const auto p = n_plus.physical();
  const auto q = n_minus.physical();
  double scale = 0.0, defect = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    scale = std::max(scale, std::abs(p[i]));
    defect = std::max(defect, std::abs(q[i] - std::conj(p[i])));
  }
  return defect / std::max(scale, 1e-300);
}

SpectralField sobolev_multiplier(const SpectralField& field, double s) {
  require_finite(field, "sobolev_multiplier");
  if (s == 0.0) return field;
  const Grid& g = field.grid();
  const auto k = g.wavenumbers();
  std::vector<double> w(k.size());
  for (std::size_t j = 0; j < k.size(); ++j)
    w[j] = std::pow(1.0 + k[j] * k[j], 0.5 * s);
  std::vector<cplx> spec(field.spectrum().begin(), field.spectrum().end());
  kernels::scale_pointwise(spec.data(), w.data(), spec.size());
  spec[static_cast<std::size_t>(g.nyquist_index())] = 0.0;
  return SpectralField::from_spectrum(field.grid_ptr(), std::move(spec));
}

std::pair<SpectralField, SpectralField> decompose_n(const SpectralField& n0,
                                                    const SpectralField& n1) {
  require_same_grid(n0, n1, "decompose_n");
  require_finite(n0, "decompose_n(n0)");
  require_finite(n1, "decompose_n(n1)");
  require_real(n0, "decompose_n(n0)");
  require_real(n1, "decompose_n(n1)");

  const Grid& g = n0.grid();
  const auto k = g.wavenumbers();
  const auto s0 = n0.spectrum();
  const auto s1 = n1.spectrum();
  const std::size_t n = s0.size();
  std::vector<cplx> plus(n), minus(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double a = std::sqrt(1.0 + k[j] * k[j]); // <k>
    const cplx h = s1[j] / (cplx(0.0, 1.0) * a);   // (1/(iA)) n1
    plus[j] = 0.5 * (s0[j] + h);
    minus[j] = 0.5 * (s0[j] - h);
  }
  const auto ny = static_cast<std::size_t>(g.nyquist_index());
  plus[ny] = 0.0;
  minus[ny] = 0.0;
  return {SpectralField::from_spectrum(n0.grid_ptr(), std::move(plus)),
          SpectralField::from_spectrum(n0.grid_ptr(), std::move(minus))};
}

std::pair<SpectralField, SpectralField> reconstruct_n(
    const SpectralField& n_plus, const SpectralField& n_minus) {
  require_same_grid(n_plus, n_minus, "reconstruct_n");
  const Grid& g = n_plus.grid();
  const auto k = g.wavenumbers();
  const auto sp = n_plus.spectrum();
  const auto sm = n_minus.spectrum();
  const std::size_t n = sp.size();
  std::vector<cplx> ns(n), nts(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double a = std::sqrt(1.0 + k[j] * k[j]);
    ns[j] = sp[j] + sm[j];
    nts[j] = cplx(0.0, 1.0) * a * (sp[j] - sm[j]);
  }
  const auto ny = static_cast<std::size_t>(g.nyquist_index());
  ns[ny] = 0.0;
  nts[ny] = 0.0;
  return {SpectralField::from_spectrum(n_plus.grid_ptr(), std::move(ns)),
          SpectralField::from_spectrum(n_plus.grid_ptr(), std::move(nts))};
}

void dealias_two_thirds(SpectralField& field) {
  const Grid& g = field.grid();
  auto& spec = field.mutable_spectrum();
  const int cutoff = g.num_points() / 3;
  for (int j = 0; j < g.num_points(); ++j) {
    const int m = g.mode_number(j);
    if (std::abs(m) > cutoff || j == g.nyquist_index())
      spec[static_cast<std::size_t>(j)] = 0.0;
  }
}

} // namespace klsm
