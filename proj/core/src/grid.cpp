#include "qcl/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qcl/error.hpp"

namespace qcl {

namespace {
bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
}  // namespace

Grid::Grid(int n, double len) : n_points(n), length(len) {
  if (!is_power_of_two(n)) {
    throw Error("Grid: n_points must be a power of two, got " + std::to_string(n));
  }
  if (!(len > 0.0)) {
    throw Error("Grid: length must be positive, got " + std::to_string(len));
  }
}

Eigen::VectorXd Grid::positions() const {
  Eigen::VectorXd x(n_points);
  for (int j = 0; j < n_points; ++j) x[j] = position(j);
  return x;
}

Eigen::VectorXd Grid::wavenumbers() const {
  const double dk = 2.0 * std::numbers::pi / length;
  Eigen::VectorXd k(n_points);
  for (int j = 0; j < n_points; ++j) {
    const int m = (j < n_points / 2) ? j : j - n_points;
    k[j] = dk * m;
  }
  return k;
}

double Grid::max_wavenumber() const { return std::numbers::pi / spacing(); }

}  // namespace qcl
