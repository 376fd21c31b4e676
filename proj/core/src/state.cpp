#include "qcl/state.hpp"

#include <cmath>
#include <string>

#include "qcl/error.hpp"

namespace qcl {

WaveFunction::WaveFunction(const Grid& g, Eigen::VectorXcd amp)
    : grid(g), amplitudes(std::move(amp)) {
  if (amplitudes.size() != grid.n_points) {
    throw Error("WaveFunction: amplitude length " + std::to_string(amplitudes.size()) +
                " does not match grid n_points " + std::to_string(grid.n_points));
  }
}

double WaveFunction::norm_sq() const { return amplitudes.squaredNorm() * grid.spacing(); }

double WaveFunction::norm() const { return std::sqrt(norm_sq()); }

WaveFunction& WaveFunction::normalize() {
  const double n = norm();
  if (!(n > 0.0)) throw Error("WaveFunction::normalize: zero norm");
  amplitudes /= n;
  return *this;
}

DensityMatrix::DensityMatrix(const Grid& g, Eigen::MatrixXcd m)
    : grid(g), elements(std::move(m)) {
  if (elements.rows() != grid.n_points || elements.cols() != grid.n_points) {
    throw Error("DensityMatrix: element matrix must be n_points x n_points");
  }
}

DensityMatrix DensityMatrix::from_pure(const WaveFunction& psi) {
  return DensityMatrix(psi.grid, psi.amplitudes * psi.amplitudes.adjoint());
}

std::complex<double> DensityMatrix::trace() const {
  return elements.trace() * grid.spacing();
}

double DensityMatrix::trace_real() const { return trace().real(); }

double DensityMatrix::hermiticity_error() const {
  return (elements - elements.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(elements * grid.spacing(),
                                                     Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double DensityMatrix::purity() const {
  const double dx = grid.spacing();
  return (elements * elements).trace().real() * dx * dx;
}

DensityMatrix& DensityMatrix::normalize() {
  const double t = trace_real();
  if (!(t > 0.0)) throw Error("DensityMatrix::normalize: non-positive trace");
  elements /= t;
  return *this;
}

CompositeState::CompositeState(const Grid& g, int qubits, Eigen::VectorXcd amp)
    : grid(g), env_qubits(qubits), amplitudes(std::move(amp)) {
  if (qubits < 0 || qubits > 10) {
    throw Error("CompositeState: env_qubits must be in [0, 10], got " + std::to_string(qubits));
  }
  if (amplitudes.size() != static_cast<Eigen::Index>(grid.n_points) * (1 << qubits)) {
    throw Error("CompositeState: amplitude length must be n_points * 2^env_qubits");
  }
}

CompositeState CompositeState::from_system(const WaveFunction& psi) {
  return CompositeState(psi.grid, 0, psi.amplitudes);
}

CompositeState CompositeState::product(const WaveFunction& psi, const Eigen::VectorXcd& chi) {
  int qubits = 0;
  while ((1 << qubits) < chi.size()) ++qubits;
  if ((1 << qubits) != chi.size()) {
    throw Error("CompositeState::product: environment vector length must be a power of two");
  }
  const int n = psi.grid.n_points;
  Eigen::VectorXcd amp(static_cast<Eigen::Index>(n) * chi.size());
  for (Eigen::Index e = 0; e < chi.size(); ++e) {
    amp.segment(e * n, n) = chi[e] * psi.amplitudes;
  }
  return CompositeState(psi.grid, qubits, std::move(amp));
}

Eigen::VectorXcd CompositeState::block(int e) const {
  return amplitudes.segment(static_cast<Eigen::Index>(e) * grid.n_points, grid.n_points);
}

void CompositeState::set_block(int e, const Eigen::VectorXcd& b) {
  amplitudes.segment(static_cast<Eigen::Index>(e) * grid.n_points, grid.n_points) = b;
}

double CompositeState::norm_sq() const { return amplitudes.squaredNorm() * grid.spacing(); }

double CompositeState::norm() const { return std::sqrt(norm_sq()); }

CompositeState& CompositeState::normalize() {
  const double n = norm();
  if (!(n > 0.0)) throw Error("CompositeState::normalize: zero norm");
  amplitudes /= n;
  return *this;
}

Eigen::VectorXcd env_plus_state(int qubits) {
  const int d = 1 << qubits;
  return Eigen::VectorXcd::Constant(d, std::complex<double>(1.0 / std::sqrt(double(d)), 0.0));
}

}  // namespace qcl
