#pragma once

#include <Eigen/Dense>
#include <complex>

#include "qcl/grid.hpp"

namespace qcl {

/// Pure state of the system on a position grid, stored in continuum
/// normalization: norm^2 = sum_j |psi_j|^2 * spacing.
struct WaveFunction {
  Grid grid;
  Eigen::VectorXcd amplitudes;

  WaveFunction() = default;
  WaveFunction(const Grid& g, Eigen::VectorXcd amp);

  double norm_sq() const;
  double norm() const;
  WaveFunction& normalize();
};

/// Position-basis density matrix of the system: elements(j,k) = <x_j|rho|x_k>,
/// trace = sum_j elements(j,j) * spacing.
struct DensityMatrix {
  Grid grid;
  Eigen::MatrixXcd elements;

  DensityMatrix() = default;
  DensityMatrix(const Grid& g, Eigen::MatrixXcd m);

  static DensityMatrix from_pure(const WaveFunction& psi);

  double trace_real() const;
  std::complex<double> trace() const;
  /// max_{jk} |rho_jk - conj(rho_kj)|
  double hermiticity_error() const;
  /// Smallest eigenvalue of the trace-normalized discrete operator rho*dx.
  double min_eigenvalue() const;
  /// Tr[rho^2] of the discrete operator; 1 for pure states.
  double purity() const;
  DensityMatrix& normalize();
};

/// Pure state of system (x) environment, the environment being a register of
/// qubits. Block layout: amplitudes[e*n + j] is the system amplitude at x_j
/// for environment configuration e (bit k of e = state of qubit k).
struct CompositeState {
  Grid grid;
  int env_qubits = 0;
  Eigen::VectorXcd amplitudes;

  CompositeState() = default;
  CompositeState(const Grid& g, int qubits, Eigen::VectorXcd amp);

  /// env_qubits = 0 embedding of a plain wavefunction.
  static CompositeState from_system(const WaveFunction& psi);
  /// Product state psi (x) chi, chi a 2^K environment amplitude vector.
  static CompositeState product(const WaveFunction& psi, const Eigen::VectorXcd& chi);

  int env_dim() const { return 1 << env_qubits; }
  Eigen::VectorXcd block(int e) const;
  void set_block(int e, const Eigen::VectorXcd& b);

  double norm_sq() const;
  double norm() const;
  CompositeState& normalize();
};

/// Uniform-superposition environment register |+>^k, the most
/// dephasing-sensitive product start.
Eigen::VectorXcd env_plus_state(int qubits);

}  // namespace qcl
