#ifndef KLSM_SPECTRAL_FIELD_HPP
#define KLSM_SPECTRAL_FIELD_HPP

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "klsm/grid.hpp"

namespace klsm {

using cplx = std::complex<double>;

/// Complex field on a periodic grid holding both the physical samples and
/// the Fourier coefficients, synchronized lazily. Value-semantic; a single
/// instance is not internally synchronized.
///
/// Discrete norms follow the quadrature convention
///   ||f||_{L2}^2 = dx * sum_j |f_j|^2 = L * sum_k |c_k|^2,
/// where c is the 1/N-normalized forward transform.
class SpectralField {
public:
  explicit SpectralField(GridPtr grid); // zero field

  static SpectralField from_physical(GridPtr grid, std::vector<cplx> values);
  static SpectralField from_spectrum(GridPtr grid, std::vector<cplx> spectrum);

  const Grid& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }
  int size() const { return grid_->num_points(); }

  std::span<const cplx> physical() const;
  std::span<const cplx> spectrum() const;

  /// Mutable access; invalidates the other representation.
  std::vector<cplx>& mutable_physical();
  std::vector<cplx>& mutable_spectrum();

  bool finite() const;
  /// Index of the first non-finite physical sample, or -1.
  int first_bad_index() const;
  double max_abs() const;

private:
  GridPtr grid_;
  mutable std::vector<cplx> physical_;
  mutable std::vector<cplx> spectrum_;
  mutable bool physical_valid_ = true;
  mutable bool spectrum_valid_ = true;

  void sync_physical() const;
  void sync_spectrum() const;
};

/// Reduced-system state (u, n_plus, n_minus) at a given model time.
/// States built from real (n0, n1) data keep n_minus = conj(n_plus).
struct SimState {
  SpectralField u;
  SpectralField n_plus;
  SpectralField n_minus;
  double time = 0.0;

  explicit SimState(GridPtr grid)
      : u(grid), n_plus(grid), n_minus(grid) {}
  SimState(SpectralField u_, SpectralField np_, SpectralField nm_, double t)
      : u(std::move(u_)), n_plus(std::move(np_)), n_minus(std::move(nm_)),
        time(t) {}

  const Grid& grid() const { return u.grid(); }
  bool finite() const {
    return u.finite() && n_plus.finite() && n_minus.finite();
  }
  /// Max pointwise |n_minus - conj(n_plus)| relative to the field scale.
  double reality_defect() const;
};

/// Applies the Fourier multiplier (1+k^2)^(s/2); s = 0 returns the field
/// unchanged. The unpaired Nyquist coefficient is zeroed whenever s != 0.
SpectralField sobolev_multiplier(const SpectralField& field, double s);

/// Splits real Klein-Gordon data (n0, n1) into the half-wave pair
///   n_pm = (n0 -+- (1/(i A)) n1) / 2,  A = (1 - d^2/dx^2)^(1/2).
std::pair<SpectralField, SpectralField> decompose_n(const SpectralField& n0,
                                                    const SpectralField& n1);

/// Inverse of decompose_n: n = n_plus + n_minus, n_t = i A (n_plus - n_minus).
std::pair<SpectralField, SpectralField> reconstruct_n(
    const SpectralField& n_plus, const SpectralField& n_minus);

/// Zeroes all modes with |mode| > N/3 (and the Nyquist mode).
void dealias_two_thirds(SpectralField& field);

} // namespace klsm

#endif
