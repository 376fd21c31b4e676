#pragma once

#include <Eigen/Dense>
#include <utility>

#include "qcl/grid.hpp"
#include "qcl/state.hpp"

namespace qcl {

/// Diagonal of the position operator: entries x_j.
Eigen::VectorXd position_operator(const Grid& grid);

/// -i hbar d/dx applied spectrally under periodic boundary conditions.
WaveFunction momentum_operator_apply(const WaveFunction& psi, double hbar);

/// Dense momentum operator in the kernel convention (F^dag diag(hbar k) F / dx).
/// Hermitian; exact on grid-commensurate plane waves.
Eigen::MatrixXcd momentum_matrix(const Grid& grid, double hbar);

/// Minimum-uncertainty Gaussian centered at phase-space point (q, p):
/// psi(x) ~ exp(-(x-q)^2 / 4 sigma^2 + i p x / hbar), so DeltaX = sigma and
/// DeltaP = hbar / (2 sigma).
struct CoherentStateSpec {
  double q = 0.0;
  double p = 0.0;
  double sigma = 1.0;
};

/// Rejects specs the grid cannot resolve (sigma <= 2 dx) or hold without
/// wrap-around (sigma >= length/8).
WaveFunction coherent_state(const CoherentStateSpec& spec, const Grid& grid, double hbar);

/// rho_S = Tr_E |Psi><Psi| over the qubit register.
DensityMatrix partial_trace_env(const CompositeState& state);

/// Tr[rho A] for a kernel-convention observable; throws if the imaginary
/// residue exceeds 1e-6 (non-Hermitian input or corrupted state).
double expectation(const Eigen::MatrixXcd& obs, const DensityMatrix& rho);

/// Tr[rho diag(d)] for a position-diagonal observable.
double expectation(const Eigen::VectorXd& obs_diagonal, const DensityMatrix& rho);

// First and second moments.
double expect_x(const WaveFunction& psi);
double expect_p(const WaveFunction& psi, double hbar);
double variance_x(const WaveFunction& psi);
double variance_p(const WaveFunction& psi, double hbar);

double expect_x(const DensityMatrix& rho);
double expect_p(const DensityMatrix& rho, double hbar);

/// <X (x) I_E> and <P (x) I_E> of a composite state (state need not be
/// normalized; moments are of the normalized state).
std::pair<double, double> expect_xp(const CompositeState& state, double hbar);

/// Position spread of a composite state's system marginal.
double variance_x(const CompositeState& state);

}  // namespace qcl
