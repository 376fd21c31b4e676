#include "qcl/evolution.hpp"

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "qcl/error.hpp"
#include "qcl/fft.hpp"

namespace qcl {

using std::complex;

namespace {

constexpr double kStabilityLimit = 0.1;

Eigen::VectorXcd half_potential_phase(const Eigen::VectorXd& v, double dt, double hbar) {
  Eigen::VectorXcd ph(v.size());
  for (Eigen::Index j = 0; j < v.size(); ++j) ph[j] = std::polar(1.0, -v[j] * dt / (2.0 * hbar));
  return ph;
}

Eigen::VectorXcd kinetic_phase(const Grid& grid, double mass, double dt, double hbar) {
  const Eigen::VectorXd k = grid.wavenumbers();
  Eigen::VectorXcd ph(k.size());
  for (Eigen::Index j = 0; j < k.size(); ++j) {
    const double rate = hbar * k[j] * k[j] / (2.0 * mass);  // 0 when mass = inf
    ph[j] = std::polar(1.0, -rate * dt);
  }
  return ph;
}

void check_dt(double dt, double rate) {
  if (!(dt > 0.0)) throw Error("evolution: dt must be positive");
  if (dt * rate >= kStabilityLimit) {
    throw Error("evolution: unstable dt = " + std::to_string(dt) + " (dt * energy rate = " +
                std::to_string(dt * rate) + " >= " + std::to_string(kStabilityLimit) + ")");
  }
}

/// rho <- U rho U^dag with U = F^dag diag(phase) F (unitary kinetic factor).
void kinetic_conjugate(Eigen::MatrixXcd& rho, const Eigen::VectorXcd& phase) {
  const Eigen::Index n = rho.rows();
  Eigen::VectorXcd tmp(n);
  auto& fft = fft_engine();
  // B = U rho, column by column
  for (Eigen::Index c = 0; c < n; ++c) {
    fft.fwd(tmp, Eigen::VectorXcd(rho.col(c)));
    tmp.array() *= phase.array();
    Eigen::VectorXcd out(n);
    fft.inv(out, tmp);
    rho.col(c) = out;
  }
  // rho' = B U^dag = (U B^dag)^dag
  Eigen::MatrixXcd bdag = rho.adjoint();
  for (Eigen::Index c = 0; c < n; ++c) {
    fft.fwd(tmp, Eigen::VectorXcd(bdag.col(c)));
    tmp.array() *= phase.array();
    Eigen::VectorXcd out(n);
    fft.inv(out, tmp);
    bdag.col(c) = out;
  }
  rho = bdag.adjoint();
}

/// Clip eigenvalues in [-1e-6, 0); throw below -1e-6. Returns clip count.
int enforce_positivity(DensityMatrix& rho) {
  const double dx = rho.grid.spacing();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.elements * dx);
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double lo = ev.minCoeff();
  if (lo < -1e-6) {
    throw Error("evolve_master: density matrix negativity " + std::to_string(lo) +
                " below -1e-6");
  }
  if (lo >= 0.0) return 0;
  int clips = 0;
  Eigen::VectorXd clipped = ev;
  for (Eigen::Index i = 0; i < clipped.size(); ++i) {
    if (clipped[i] < 0.0) {
      clipped[i] = 0.0;
      ++clips;
    }
  }
  const double trace_before = rho.trace_real();
  Eigen::MatrixXcd m = es.eigenvectors() * clipped.asDiagonal() * es.eigenvectors().adjoint();
  rho.elements = m / dx;
  rho.elements *= trace_before / rho.trace_real();
  return clips;
}

}  // namespace

double max_energy_rate(const HamiltonianSpec& ham, const Grid& grid, double hbar, double lambda) {
  const Eigen::VectorXd v = potential_on_grid(ham, grid);
  const double v_rate = v.cwiseAbs().maxCoeff() / hbar;
  // States resolved per the grid invariants (sigma > 2 dx) occupy at most
  // about a quarter of the Nyquist band.
  const double k_typ = 0.25 * grid.max_wavenumber();
  const double kin_rate = hbar * k_typ * k_typ / (2.0 * ham.mass);  // 0 for mass = inf
  const double half = 0.5 * grid.length;
  const double deph_rate = lambda * half * half;
  return std::max({v_rate, kin_rate, deph_rate});
}

double max_energy_rate(const HamiltonianSpec& ham, const EnvironmentSpec& env, const Grid& grid,
                       double hbar) {
  const double base = max_energy_rate(ham, grid, hbar);
  const double env_rate =
      (env.couplings.cwiseAbs().sum() * 0.5 * grid.length + env.self_energies.cwiseAbs().sum()) /
      hbar;
  return std::max(base, env_rate);
}

double default_dt(const HamiltonianSpec& ham, const Grid& grid, double hbar, double lambda) {
  return 0.05 / max_energy_rate(ham, grid, hbar, lambda);
}

CompositeState evolve_closed(const CompositeState& state, const HamiltonianSpec& ham,
                             const EnvironmentSpec& env, double dt, int steps, double hbar) {
  if (env.qubits() != state.env_qubits) {
    throw Error("evolve_closed: environment spec has " + std::to_string(env.qubits()) +
                " qubits, state has " + std::to_string(state.env_qubits));
  }
  const Grid& grid = state.grid;
  check_dt(dt, max_energy_rate(ham, env, grid, hbar));

  const Eigen::VectorXd v = potential_on_grid(ham, grid);
  const Eigen::VectorXd x = grid.positions();
  const Eigen::VectorXcd kin = kinetic_phase(grid, ham.mass, dt, hbar);

  const int n = grid.n_points;
  const int blocks = state.env_dim();
  std::vector<Eigen::VectorXcd> half(blocks);
  for (int e = 0; e < blocks; ++e) {
    const Eigen::VectorXd ve =
        v.array() + env.coupling_of_config(e) * x.array() + env.self_energy_of_config(e);
    half[e] = half_potential_phase(ve, dt, hbar);
  }

  CompositeState out = state;
  auto& fft = fft_engine();
  Eigen::VectorXcd work(n), hat(n);
  for (int s = 0; s < steps; ++s) {
    for (int e = 0; e < blocks; ++e) {
      auto seg = out.amplitudes.segment(static_cast<Eigen::Index>(e) * n, n);
      work = half[e].array() * seg.array();
      fft.fwd(hat, work);
      hat.array() *= kin.array();
      fft.inv(work, hat);
      seg = half[e].array() * work.array();
    }
  }
  return out;
}

MasterResult evolve_master(const DensityMatrix& rho, const MasterEquationSpec& spec, double dt,
                           int steps, double hbar, const MasterOptions& opts) {
  if (spec.lambda < 0.0) throw Error("evolve_master: lambda must be non-negative");
  const Grid& grid = rho.grid;
  check_dt(dt, max_energy_rate(spec.hamiltonian, grid, hbar, spec.lambda));

  const Eigen::VectorXd v = potential_on_grid(spec.hamiltonian, grid);
  const Eigen::VectorXd x = grid.positions();
  const Eigen::VectorXcd kin = kinetic_phase(grid, spec.hamiltonian.mass, dt, hbar);

  const int n = grid.n_points;
  // Half-step factor: potential phase and dephasing decay, both diagonal in
  // position and therefore exact.
  Eigen::MatrixXcd half(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const double u = x[j] - x[k];
      const double damp = std::exp(-spec.lambda * u * u * dt / 2.0);
      half(j, k) = damp * std::polar(1.0, -(v[j] - v[k]) * dt / (2.0 * hbar));
    }
  }

  MasterResult result{rho, {}};
  result.history.times.push_back(0.0);
  result.history.snapshots.push_back(rho);

  auto snapshot = [&](int step_index) {
    if (opts.positivity_check) {
      result.history.negativity_clips += enforce_positivity(result.rho);
    }
    result.history.times.push_back(step_index * dt);
    result.history.snapshots.push_back(result.rho);
  };

  for (int s = 1; s <= steps; ++s) {
    result.rho.elements.array() *= half.array();
    kinetic_conjugate(result.rho.elements, kin);
    result.rho.elements.array() *= half.array();
    if (opts.snapshot_stride > 0 && s % opts.snapshot_stride == 0 && s != steps) {
      snapshot(s);
    }
  }
  if (steps > 0) snapshot(steps);
  return result;
}

DecoherenceFit decoherence_timescale(const MasterHistory& history, int j, int k) {
  const std::size_t m = history.times.size();
  if (m < 3) throw Error("decoherence_timescale: history too short (need >= 3 snapshots)");

  std::vector<double> t, logy;
  const double y0 = std::abs(history.snapshots.front().elements(j, k));
  if (!(y0 > 0.0)) throw Error("decoherence_timescale: chosen element vanishes at t = 0");
  for (std::size_t i = 0; i < m; ++i) {
    const double y = std::abs(history.snapshots[i].elements(j, k));
    if (y > 1e-12 * y0) {
      t.push_back(history.times[i]);
      logy.push_back(std::log(y));
    }
  }
  if (t.size() < 3) throw Error("decoherence_timescale: too few usable points");

  const double nn = static_cast<double>(t.size());
  double st = 0, sy = 0, stt = 0, sty = 0, syy = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    st += t[i];
    sy += logy[i];
    stt += t[i] * t[i];
    sty += t[i] * logy[i];
    syy += logy[i] * logy[i];
  }
  const double denom = nn * stt - st * st;
  if (!(denom > 0.0)) throw Error("decoherence_timescale: degenerate time grid");
  const double slope = (nn * sty - st * sy) / denom;
  const double ss_tot = syy - sy * sy / nn;
  double r2 = 1.0;
  if (ss_tot > 0.0) {
    const double intercept = (sy - slope * st) / nn;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const double r = logy[i] - (intercept + slope * t[i]);
      ss_res += r * r;
    }
    r2 = 1.0 - ss_res / ss_tot;
  } else if (std::abs(slope) < 1e-14) {
    throw Error("decoherence_timescale: element does not decay (Lambda = 0?)");
  }

  if (slope >= -1e-12) {
    throw Error("decoherence_timescale: element does not decay (Lambda = 0?)");
  }
  if (r2 < 0.9) {
    throw Error("decoherence_timescale: non-exponential decay (R^2 = " + std::to_string(r2) +
                ")");
  }
  return {-1.0 / slope, r2};
}

}  // namespace qcl
