#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qcl/grid.hpp"
#include "qcl/state.hpp"

namespace qcl {

struct PhaseWindow {
  double q_min = 0.0, q_max = 0.0;
  double p_min = 0.0, p_max = 0.0;
  double area() const { return (q_max - q_min) * (p_max - p_min); }
};

/// Rectangular cell mu_alpha of a phase-space partition, indexed by the
/// integer pair (iq, ip).
struct PhaseCell {
  double q_min = 0.0, q_max = 0.0;
  double p_min = 0.0, p_max = 0.0;
  int iq = 0, ip = 0;
  double area() const { return (q_max - q_min) * (p_max - p_min); }
};

struct PhasePartition {
  PhaseWindow window;
  std::vector<PhaseCell> cells;
  int quad_per_axis = 8;  // midpoint-rule points per cell per axis
};

/// n_q x n_p uniform tiling of the window.
PhasePartition uniform_partition(const PhaseWindow& window, int n_q, int n_p,
                                 int quad_per_axis = 8);

/// Checks cell non-degeneracy, containment, disjointness and exact tiling.
void validate_partition(const PhasePartition& partition);

/// POVM element Pi_alpha = integral over mu_alpha of dq dp/(2 pi hbar) |z><z|,
/// stored as a position kernel. Positive semidefinite and Hermitian by
/// construction.
struct PovmElement {
  int iq = 0, ip = 0;
  Eigen::MatrixXcd op;
};

/// Midpoint-rule quadrature of the cell integrals with coherent states of
/// width sigma. Rejects cells whose phase-space area does not exceed hbar
/// (the applicability condition for the approximate-PVM property).
std::vector<PovmElement> build_povm(const PhasePartition& partition, double sigma,
                                    const Grid& grid, double hbar);

/// max over probes of |<psi|(sum_alpha Pi_alpha - I)|psi>|. Probes must carry
/// at least 99.9% of their position and momentum marginal mass inside the
/// window; violators are an error.
double check_completeness(const std::vector<PovmElement>& povm,
                          const std::vector<WaveFunction>& probes, const PhaseWindow& window,
                          double hbar);

/// max over (alpha, beta) of ||Pi_a Pi_b - delta_ab Pi_a|| in the operator
/// norm, normalized per pair by ||Pi_a|| (so a perfect PVM scores 0 and the
/// score is scale-free). Decreases as cell dimensions grow relative to
/// (sigma, hbar/sigma).
double check_approx_pvm(const std::vector<PovmElement>& povm, const Grid& grid);

/// Fraction of |psi|^2 mass with position inside [q_min, q_max].
double position_window_mass(const WaveFunction& psi, double q_min, double q_max);
/// Fraction of momentum marginal mass with hbar*k inside [p_min, p_max].
double momentum_window_mass(const WaveFunction& psi, double p_min, double p_max, double hbar);

}  // namespace qcl
