#include "klsm/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace klsm {

Grid::Grid(int num_points, double domain_length)
    : n_(num_points), length_(domain_length) {
  if (num_points < 8 || num_points % 2 != 0)
    throw std::invalid_argument("grid: num_points must be even and >= 8, got " +
                                std::to_string(num_points));
  if (!(domain_length > 0.0) || !std::isfinite(domain_length))
    throw std::invalid_argument("grid: domain_length must be positive");
  k_.resize(static_cast<std::size_t>(n_));
  const double dk = 2.0 * std::numbers::pi / length_;
  for (int j = 0; j < n_; ++j)
    k_[static_cast<std::size_t>(j)] = dk * mode_number(j);
}

GridPtr make_grid(int num_points, double domain_length) {
  return std::make_shared<const Grid>(num_points, domain_length);
}

} // namespace klsm
