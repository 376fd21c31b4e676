#include "qcl/hamiltonian.hpp"

#include <cmath>
#include <string>

#include "qcl/error.hpp"

namespace qcl {

namespace {

double tab_interp(const TabulatedPotential& tab, double x) {
  const Grid& g = tab.grid;
  const double u = (x + 0.5 * g.length) / g.spacing();
  const int j = static_cast<int>(std::floor(u));
  const double f = u - j;
  const int n = g.n_points;
  const int j0 = ((j % n) + n) % n;
  const int j1 = (j0 + 1) % n;
  return (1.0 - f) * tab.values[j0] + f * tab.values[j1];
}

}  // namespace

double potential_value(const HamiltonianSpec& ham, double x) {
  return std::visit(
      [&](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FreePotential>) {
          return 0.0;
        } else if constexpr (std::is_same_v<T, HarmonicPotential>) {
          return 0.5 * ham.mass * v.omega * v.omega * x * x;
        } else if constexpr (std::is_same_v<T, QuarticPotential>) {
          return v.a * x * x + v.b * x * x * x * x;
        } else if constexpr (std::is_same_v<T, DoubleWellPotential>) {
          return -v.alpha * x * x + v.beta * x * x * x * x;
        } else {
          return tab_interp(v, x);
        }
      },
      ham.potential);
}

double potential_slope(const HamiltonianSpec& ham, double x) {
  return std::visit(
      [&](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FreePotential>) {
          return 0.0;
        } else if constexpr (std::is_same_v<T, HarmonicPotential>) {
          return ham.mass * v.omega * v.omega * x;
        } else if constexpr (std::is_same_v<T, QuarticPotential>) {
          return 2.0 * v.a * x + 4.0 * v.b * x * x * x;
        } else if constexpr (std::is_same_v<T, DoubleWellPotential>) {
          return -2.0 * v.alpha * x + 4.0 * v.beta * x * x * x;
        } else {
          // centered difference of the table
          const double h = v.grid.spacing();
          return (tab_interp(v, x + h) - tab_interp(v, x - h)) / (2.0 * h);
        }
      },
      ham.potential);
}

Eigen::VectorXd potential_on_grid(const HamiltonianSpec& ham, const Grid& grid) {
  if (const auto* tab = std::get_if<TabulatedPotential>(&ham.potential)) {
    if (tab->values.size() != grid.n_points) {
      throw Error("TabulatedPotential: table length does not match grid");
    }
    if (!tab->values.allFinite()) throw Error("TabulatedPotential: non-finite values");
    return tab->values;
  }
  Eigen::VectorXd v(grid.n_points);
  for (int j = 0; j < grid.n_points; ++j) v[j] = potential_value(ham, grid.position(j));
  if (!v.allFinite()) throw Error("potential_on_grid: potential unbounded on grid");
  return v;
}

Eigen::VectorXd potential_slope_on_grid(const HamiltonianSpec& ham, const Grid& grid) {
  Eigen::VectorXd v(grid.n_points);
  for (int j = 0; j < grid.n_points; ++j) v[j] = potential_slope(ham, grid.position(j));
  return v;
}

EnvironmentSpec::EnvironmentSpec(Eigen::VectorXd g, Eigen::VectorXd eps)
    : couplings(std::move(g)), self_energies(std::move(eps)) {
  if (couplings.size() != self_energies.size()) {
    throw Error("EnvironmentSpec: couplings and self_energies must have equal length");
  }
}

double EnvironmentSpec::coupling_of_config(int e) const {
  double acc = 0.0;
  for (int k = 0; k < qubits(); ++k) acc += ((e >> k) & 1) ? -couplings[k] : couplings[k];
  return acc;
}

double EnvironmentSpec::self_energy_of_config(int e) const {
  double acc = 0.0;
  for (int k = 0; k < qubits(); ++k) acc += ((e >> k) & 1) ? -self_energies[k] : self_energies[k];
  return acc;
}

}  // namespace qcl
