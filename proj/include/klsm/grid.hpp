#ifndef KLSM_GRID_HPP
#define KLSM_GRID_HPP

#include <memory>
#include <span>
#include <vector>

namespace klsm {

/// Uniform periodic grid on [-L/2, L/2) with FFT-ordered wavenumbers
/// k_j = 2*pi*m_j / L, m_j in {0, 1, ..., N/2-1, -N/2, ..., -1}.
class Grid {
public:
  Grid(int num_points, double domain_length);

  int num_points() const { return n_; }
  double length() const { return length_; }
  double dx() const { return length_ / n_; }
  double x(int j) const { return -0.5 * length_ + j * dx(); }

  std::span<const double> wavenumbers() const { return k_; }
  double k(int j) const { return k_[static_cast<std::size_t>(j)]; }
  int nyquist_index() const { return n_ / 2; }

  /// Integer mode index m_j for FFT bin j (signed, Nyquist mapped to -N/2).
  int mode_number(int j) const { return j < n_ / 2 ? j : j - n_; }

  bool operator==(const Grid& other) const {
    return n_ == other.n_ && length_ == other.length_;
  }

private:
  int n_;
  double length_;
  std::vector<double> k_;
};

using GridPtr = std::shared_ptr<const Grid>;

GridPtr make_grid(int num_points, double domain_length);

} // namespace klsm

#endif
