#pragma once

#include <Eigen/Dense>

namespace qcl {

/// Periodic 1-D position grid. Positions are x_j = -length/2 + j*spacing.
/// n_points must be a power of two so spectral derivatives stay exact.
struct Grid {
  int n_points = 0;
  double length = 0.0;

  Grid() = default;
  Grid(int n, double len);

  double spacing() const { return length / n_points; }
  double position(int j) const { return -0.5 * length + j * spacing(); }

  Eigen::VectorXd positions() const;

  /// Angular wavenumbers in FFT bin order: k_m = 2*pi/length * m with
  /// m = j for j < n/2 and m = j - n otherwise (Nyquist bin carries -n/2).
  Eigen::VectorXd wavenumbers() const;

  /// Largest representable |k|.
  double max_wavenumber() const;

  bool operator==(const Grid&) const = default;
};

}  // namespace qcl
