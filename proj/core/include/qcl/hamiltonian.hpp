#pragma once

#include <Eigen/Dense>
#include <variant>

#include "qcl/grid.hpp"

namespace qcl {

struct FreePotential {};

/// V = 1/2 m omega^2 x^2
struct HarmonicPotential {
  double omega = 1.0;
};

/// V = a x^2 + b x^4
struct QuarticPotential {
  double a = 0.0;
  double b = 1.0;
};

/// V = -alpha x^2 + beta x^4
struct DoubleWellPotential {
  double alpha = 1.0;
  double beta = 1.0;
};

/// V sampled on a grid; evaluated off-node by linear interpolation.
struct TabulatedPotential {
  Grid grid;
  Eigen::VectorXd values;
};

using Potential = std::variant<FreePotential, HarmonicPotential, QuarticPotential,
                               DoubleWellPotential, TabulatedPotential>;

/// H = P^2 / 2m + V(X). mass may be +infinity to drop the kinetic term
/// (static dephasing checks).
struct HamiltonianSpec {
  double mass = 1.0;
  Potential potential = FreePotential{};
};

double potential_value(const HamiltonianSpec& ham, double x);
double potential_slope(const HamiltonianSpec& ham, double x);
Eigen::VectorXd potential_on_grid(const HamiltonianSpec& ham, const Grid& grid);
Eigen::VectorXd potential_slope_on_grid(const HamiltonianSpec& ham, const Grid& grid);

/// Qubit register environment: H_E = sum_k eps_k sigma_z^k, coupled to the
/// system by the pure-dephasing interaction H_I = X (x) sum_k g_k sigma_z^k.
struct EnvironmentSpec {
  Eigen::VectorXd couplings;      // g_k
  Eigen::VectorXd self_energies;  // eps_k

  EnvironmentSpec() = default;
  EnvironmentSpec(Eigen::VectorXd g, Eigen::VectorXd eps);

  int qubits() const { return static_cast<int>(couplings.size()); }

  /// sum_k g_k s_k(e) with s_k = +1 for bit 0 and -1 for bit 1.
  double coupling_of_config(int e) const;
  double self_energy_of_config(int e) const;
};

/// i hbar d rho/dt = [H, rho] - i hbar Lambda [X, [X, rho]].
/// With H = 0 this decays coherences as rho(x,x',t) = rho0 exp(-Lambda (x-x')^2 t).
struct MasterEquationSpec {
  HamiltonianSpec hamiltonian;
  double lambda = 0.0;  // 1 / (length^2 * time)
};

}  // namespace qcl
