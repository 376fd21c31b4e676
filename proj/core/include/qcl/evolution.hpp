#pragma once

#include <vector>

#include "qcl/hamiltonian.hpp"
#include "qcl/state.hpp"

namespace qcl {

/// Fastest rate (1/time) among the potential, the mid-band kinetic scale and
/// the dephasing term; the integrator guard requires dt * rate < 0.1.
double max_energy_rate(const HamiltonianSpec& ham, const Grid& grid, double hbar,
                       double lambda = 0.0);
double max_energy_rate(const HamiltonianSpec& ham, const EnvironmentSpec& env, const Grid& grid,
                       double hbar);

/// dt = 0.05 / max_energy_rate.
double default_dt(const HamiltonianSpec& ham, const Grid& grid, double hbar, double lambda = 0.0);

/// Strang-split unitary evolution of the system (x) qubit register under
/// H = H_S (x) I + I (x) H_E + X (x) sum_k g_k sigma_z^k. Each environment
/// configuration evolves as an independent split-operator problem with the
/// shifted potential V(x) + G_e x + E_e.
CompositeState evolve_closed(const CompositeState& state, const HamiltonianSpec& ham,
                             const EnvironmentSpec& env, double dt, int steps, double hbar);

struct MasterHistory {
  std::vector<double> times;
  std::vector<DensityMatrix> snapshots;  // always includes t = 0 and t_final
  int negativity_clips = 0;
};

struct MasterOptions {
  int snapshot_stride = 0;        // 0: endpoints only
  bool positivity_check = false;  // eigenvalue clip/flag at snapshot times
};

struct MasterResult {
  DensityMatrix rho;
  MasterHistory history;
};

/// Strang-split integration of
///   d rho/dt = -(i/hbar)[H, rho] - Lambda [X, [X, rho]].
/// The potential and double-commutator sub-steps are exact (position
/// diagonal); the kinetic sub-step is a spectral unitary conjugation. Trace
/// and Hermiticity are preserved structurally; positivity is preserved up to
/// roundoff (the damping factor is a positive-semidefinite Gaussian kernel).
MasterResult evolve_master(const DensityMatrix& rho, const MasterEquationSpec& spec, double dt,
                           int steps, double hbar, const MasterOptions& opts = {});

struct DecoherenceFit {
  double tau = 0.0;
  double r_squared = 0.0;
};

/// Exponential decay time of |<x_j| rho |x_k>| over the stored history.
/// Throws when there is no decay (Lambda = 0) or the fit is non-exponential
/// (R^2 < 0.9).
DecoherenceFit decoherence_timescale(const MasterHistory& history, int j, int k);

}  // namespace qcl
