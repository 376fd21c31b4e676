#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/FFT>

namespace qcl {

/// Thread-local FFT engine (kissfft backend caches plans per size and is not
/// shareable across threads).
Eigen::FFT<double>& fft_engine();

/// Unnormalized forward DFT: out_k = sum_j in_j exp(-2*pi*i*j*k/n).
Eigen::VectorXcd fft_forward(const Eigen::VectorXcd& in);

/// Inverse DFT scaled by 1/n, so inverse(forward(x)) == x.
Eigen::VectorXcd fft_inverse(const Eigen::VectorXcd& in);

}  // namespace qcl
