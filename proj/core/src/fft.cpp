#include "qcl/fft.hpp"

namespace qcl {

Eigen::FFT<double>& fft_engine() {
  thread_local Eigen::FFT<double> engine;
  return engine;
}

Eigen::VectorXcd fft_forward(const Eigen::VectorXcd& in) {
  Eigen::VectorXcd out(in.size());
  fft_engine().fwd(out, in);
  return out;
}

Eigen::VectorXcd fft_inverse(const Eigen::VectorXcd& in) {
  Eigen::VectorXcd out(in.size());
  fft_engine().inv(out, in);
  return out;
}

}  // namespace qcl
