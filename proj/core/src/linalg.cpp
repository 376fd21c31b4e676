#include "qcl/linalg.hpp"

namespace qcl {

double operator_norm(const Grid& g, const Eigen::MatrixXcd& a) {
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(a * g.spacing());
  return svd.singularValues()(0);
}

Eigen::VectorXd hermitian_eigenvalues(const Grid& g, const Eigen::MatrixXcd& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a * g.spacing(), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

}  // namespace qcl
