#pragma once

#include <Eigen/Dense>
#include <complex>

#include "qcl/grid.hpp"

namespace qcl {

// Kernel convention: an operator A is stored as its position kernel
// A(x_j, x_k); compositions and traces carry the grid measure dx, so
// (A B)(x,x') = sum_y A(x,y) B(y,x') dx and Tr A = sum_j A(x_j,x_j) dx.

/// <a|b> = sum_j conj(a_j) b_j dx
inline std::complex<double> inner(const Grid& g, const Eigen::VectorXcd& a,
                                  const Eigen::VectorXcd& b) {
  return a.dot(b) * g.spacing();  // Eigen's dot conjugates the left argument
}

inline Eigen::VectorXcd kernel_apply(const Grid& g, const Eigen::MatrixXcd& a,
                                     const Eigen::VectorXcd& v) {
  return (a * v) * g.spacing();
}

inline Eigen::MatrixXcd kernel_mul(const Grid& g, const Eigen::MatrixXcd& a,
                                   const Eigen::MatrixXcd& b) {
  return (a * b) * g.spacing();
}

inline std::complex<double> kernel_trace(const Grid& g, const Eigen::MatrixXcd& a) {
  return a.trace() * g.spacing();
}

/// <psi|A|psi> with the grid measure.
inline std::complex<double> kernel_expect(const Grid& g, const Eigen::MatrixXcd& a,
                                          const Eigen::VectorXcd& psi) {
  const double dx = g.spacing();
  return (psi.dot(a * psi)) * dx * dx;
}

/// Operator norm (largest singular value) of the discrete operator A*dx.
double operator_norm(const Grid& g, const Eigen::MatrixXcd& a);

/// Eigenvalues of the discrete operator A*dx, A Hermitian, ascending.
Eigen::VectorXd hermitian_eigenvalues(const Grid& g, const Eigen::MatrixXcd& a);

}  // namespace qcl
