#include "qcl/operators.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "qcl/error.hpp"
#include "qcl/fft.hpp"
#include "qcl/linalg.hpp"

namespace qcl {

using std::complex;

Eigen::VectorXd position_operator(const Grid& grid) { return grid.positions(); }

WaveFunction momentum_operator_apply(const WaveFunction& psi, double hbar) {
  Eigen::VectorXcd hat = fft_forward(psi.amplitudes);
  const Eigen::VectorXd k = psi.grid.wavenumbers();
  hat.array() *= (hbar * k.array()).cast<complex<double>>();
  return WaveFunction(psi.grid, fft_inverse(hat));
}

Eigen::MatrixXcd momentum_matrix(const Grid& grid, double hbar) {
  const int n = grid.n_points;
  const Eigen::VectorXd k = grid.wavenumbers();
  Eigen::MatrixXcd f(n, n);
  const double w = -2.0 * std::numbers::pi / n;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      f(r, c) = std::polar(1.0, w * double(r) * double(c));
    }
  }
  Eigen::MatrixXcd p = f.adjoint() * (hbar * k.array()).matrix().asDiagonal() * f / double(n);
  // Literal matrix -> kernel convention.
  return p / grid.spacing();
}

WaveFunction coherent_state(const CoherentStateSpec& spec, const Grid& grid, double hbar) {
  if (!(spec.sigma > 0.0)) throw Error("coherent_state: sigma must be positive");
  if (!(spec.sigma > 2.0 * grid.spacing())) {
    throw Error("coherent_state: sigma = " + std::to_string(spec.sigma) +
                " is not resolvable (need sigma > 2*spacing = " +
                std::to_string(2.0 * grid.spacing()) + ")");
  }
  if (!(spec.sigma < grid.length / 8.0)) {
    throw Error("coherent_state: sigma = " + std::to_string(spec.sigma) +
                " too wide for the grid (need sigma < length/8 = " +
                std::to_string(grid.length / 8.0) + ")");
  }
  const int n = grid.n_points;
  Eigen::VectorXcd amp(n);
  const double inv4s2 = 1.0 / (4.0 * spec.sigma * spec.sigma);
  for (int j = 0; j < n; ++j) {
    const double x = grid.position(j);
    const double d = x - spec.q;
    amp[j] = std::exp(-d * d * inv4s2) * std::polar(1.0, spec.p * x / hbar);
  }
  WaveFunction psi(grid, std::move(amp));
  psi.normalize();
  return psi;
}

DensityMatrix partial_trace_env(const CompositeState& state) {
  const int n = state.grid.n_points;
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(n, n);
  for (int e = 0; e < state.env_dim(); ++e) {
    const auto b = state.amplitudes.segment(static_cast<Eigen::Index>(e) * n, n);
    rho.noalias() += b * b.adjoint();
  }
  return DensityMatrix(state.grid, std::move(rho));
}

double expectation(const Eigen::MatrixXcd& obs, const DensityMatrix& rho) {
  const complex<double> val = kernel_trace(rho.grid, kernel_mul(rho.grid, rho.elements, obs));
  if (std::abs(val.imag()) > 1e-6 * (1.0 + std::abs(val.real()))) {
    throw Error("expectation: imaginary residue " + std::to_string(val.imag()) +
                " (observable not Hermitian or state corrupted)");
  }
  return val.real();
}

double expectation(const Eigen::VectorXd& obs_diagonal, const DensityMatrix& rho) {
  return (rho.elements.diagonal().real().array() * obs_diagonal.array()).sum() *
         rho.grid.spacing();
}

double expect_x(const WaveFunction& psi) {
  const Eigen::VectorXd x = psi.grid.positions();
  const double w = (psi.amplitudes.array().abs2() * x.array()).sum() * psi.grid.spacing();
  return w / psi.norm_sq();
}

double expect_p(const WaveFunction& psi, double hbar) {
  const WaveFunction pp = momentum_operator_apply(psi, hbar);
  return inner(psi.grid, psi.amplitudes, pp.amplitudes).real() / psi.norm_sq();
}

double variance_x(const WaveFunction& psi) {
  const Eigen::VectorXd x = psi.grid.positions();
  const Eigen::ArrayXd w = psi.amplitudes.array().abs2() * psi.grid.spacing() / psi.norm_sq();
  const double m1 = (w * x.array()).sum();
  const double m2 = (w * x.array().square()).sum();
  return m2 - m1 * m1;
}

double variance_p(const WaveFunction& psi, double hbar) {
  const WaveFunction pp = momentum_operator_apply(psi, hbar);
  const double m2 = pp.norm_sq() / psi.norm_sq();
  const double m1 = expect_p(psi, hbar);
  return m2 - m1 * m1;
}

double expect_x(const DensityMatrix& rho) {
  return expectation(position_operator(rho.grid), rho) / rho.trace_real();
}

double expect_p(const DensityMatrix& rho, double hbar) {
  // Tr[P rho]: apply -i hbar d/dx along the first index, then trace.
  const int n = rho.grid.n_points;
  const Eigen::VectorXd k = rho.grid.wavenumbers();
  complex<double> tr = 0.0;
  for (int c = 0; c < n; ++c) {
    Eigen::VectorXcd col = fft_forward(rho.elements.col(c));
    col.array() *= (hbar * k.array()).cast<complex<double>>();
    tr += fft_inverse(col)[c];
  }
  tr *= rho.grid.spacing();
  return tr.real() / rho.trace_real();
}

std::pair<double, double> expect_xp(const CompositeState& state, double hbar) {
  const int n = state.grid.n_points;
  const Eigen::VectorXd x = state.grid.positions();
  const Eigen::VectorXd k = state.grid.wavenumbers();
  const double dx = state.grid.spacing();
  double qx = 0.0, pp = 0.0, nrm = 0.0;
  for (int e = 0; e < state.env_dim(); ++e) {
    const Eigen::VectorXcd b = state.block(e);
    nrm += b.squaredNorm() * dx;
    qx += (b.array().abs2() * x.array()).sum() * dx;
    Eigen::VectorXcd hat = fft_forward(b);
    hat.array() *= (hbar * k.array()).cast<complex<double>>();
    pp += (b.dot(fft_inverse(hat)) * dx).real();
  }
  if (!(nrm > 0.0)) throw Error("expect_xp: zero-norm composite state");
  return {qx / nrm, pp / nrm};
}

double variance_x(const CompositeState& state) {
  const int n = state.grid.n_points;
  const Eigen::VectorXd x = state.grid.positions();
  const double dx = state.grid.spacing();
  Eigen::ArrayXd w = Eigen::ArrayXd::Zero(n);
  for (int e = 0; e < state.env_dim(); ++e) {
    w += state.block(e).array().abs2() * dx;
  }
  w /= w.sum();
  const double m1 = (w * x.array()).sum();
  const double m2 = (w * x.array().square()).sum();
  return m2 - m1 * m1;
}

}  // namespace qcl
