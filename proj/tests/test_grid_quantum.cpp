#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "oracles.hpp"
#include "qcl/error.hpp"
#include "qcl/grid.hpp"
#include "qcl/linalg.hpp"
#include "qcl/operators.hpp"
#include "qcl/state.hpp"

using namespace qcl;
using std::complex;

namespace {
constexpr double kHbar = 1.0;
}

TEST_CASE("grid rejects invalid construction") {
  CHECK_THROWS_AS(Grid(100, 10.0), Error);  // not a power of two
  CHECK_THROWS_AS(Grid(64, -1.0), Error);
  CHECK_THROWS_AS(Grid(0, 1.0), Error);
}

TEST_CASE("position operator entries equal grid coordinates") {
  const Grid g(4, 4.0);
  const Eigen::VectorXd x = position_operator(g);
  CHECK(x[0] == doctest::Approx(-2.0));
  CHECK(x[1] == doctest::Approx(-1.0));
  CHECK(x[2] == doctest::Approx(0.0));
  CHECK(x[3] == doctest::Approx(1.0));
}

TEST_CASE("position expectation: symmetric packet and displaced packet") {
  const Grid g(256, 24.0);
  const WaveFunction centered = coherent_state({0.0, 0.0, 1.0}, g, kHbar);
  CHECK(std::abs(expect_x(centered)) < 1e-10);

  const WaveFunction shifted = coherent_state({1.5, 0.0, 1.0}, g, kHbar);
  CHECK(expect_x(shifted) == doctest::Approx(1.5).epsilon(1e-6));
}

TEST_CASE("momentum operator is exact on commensurate plane waves") {
  const Grid g(128, 16.0);
  const double k = 2.0 * std::numbers::pi / g.length * 5.0;  // bin 5
  Eigen::VectorXcd amp(g.n_points);
  for (int j = 0; j < g.n_points; ++j) amp[j] = std::polar(1.0, k * g.position(j));
  WaveFunction psi(g, amp);
  psi.normalize();

  const WaveFunction out = momentum_operator_apply(psi, kHbar);
  const Eigen::VectorXcd expected = kHbar * k * psi.amplitudes;
  CHECK((out.amplitudes - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("momentum expectation: parity and boosted packet") {
  const Grid g(256, 24.0);
  const WaveFunction even = coherent_state({0.0, 0.0, 1.2}, g, kHbar);
  CHECK(std::abs(expect_p(even, kHbar)) < 1e-10);

  // Oracle: analytic Gaussian momentum integral, evaluated by quadrature.
  const double p_expected = oracle::gaussian_p_moment_quadrature(0.0, 0.7, 1.0, kHbar);
  CHECK(p_expected == doctest::Approx(0.7).epsilon(1e-9));
  const WaveFunction boosted = coherent_state({0.0, 0.7, 1.0}, g, kHbar);
  CHECK(expect_p(boosted, kHbar) == doctest::Approx(p_expected).epsilon(1e-6));
}

TEST_CASE("momentum matrix is Hermitian and matches spectral application") {
  const Grid g(64, 12.0);
  const Eigen::MatrixXcd p = momentum_matrix(g, kHbar);
  CHECK((p - p.adjoint()).cwiseAbs().maxCoeff() < 1e-10);

  const WaveFunction psi = coherent_state({0.5, 1.0, 0.8}, g, kHbar);
  const Eigen::VectorXcd via_matrix = kernel_apply(g, p, psi.amplitudes);
  const Eigen::VectorXcd via_fft = momentum_operator_apply(psi, kHbar).amplitudes;
  CHECK((via_matrix - via_fft).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("coherent state: construction moments and overlap law") {
  const Grid g(256, 24.0);

  SUBCASE("z=(0,0) is an even real Gaussian") {
    const WaveFunction psi = coherent_state({0.0, 0.0, 1.0}, g, kHbar);
    CHECK(psi.amplitudes.imag().cwiseAbs().maxCoeff() < 1e-14);
    for (int j = 1; j < g.n_points; ++j) {
      // x_{n-j} = -x_j on this grid
      CHECK(std::abs(psi.amplitudes[j].real() - psi.amplitudes[g.n_points - j].real()) < 1e-12);
    }
    CHECK(std::abs(expect_x(psi)) < 1e-10);
    CHECK(std::abs(expect_p(psi, kHbar)) < 1e-10);
  }

  SUBCASE("z=(1,2) has the requested moments") {
    const WaveFunction psi = coherent_state({1.0, 2.0, 1.0}, g, kHbar);
    CHECK(expect_x(psi) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(expect_p(psi, kHbar) == doctest::Approx(2.0).epsilon(1e-6));
  }

  SUBCASE("overlap against the closed-form Gaussian integral") {
    const double sigma = 1.1, dq = 1.7;
    const WaveFunction a = coherent_state({0.0, 0.4, sigma}, g, kHbar);
    const WaveFunction b = coherent_state({dq, 0.4, sigma}, g, kHbar);
    const double expected = oracle::coherent_overlap_abs(dq, 0.0, sigma, kHbar);
    CHECK(expected == doctest::Approx(std::exp(-dq * dq / (8.0 * sigma * sigma))));
    CHECK(std::abs(inner(g, a.amplitudes, b.amplitudes)) ==
          doctest::Approx(expected).epsilon(1e-6));
  }

  SUBCASE("grid-resolution guards") {
    CHECK_THROWS_AS(coherent_state({0.0, 0.0, 0.1}, g, kHbar), Error);  // under-resolved
    CHECK_THROWS_AS(coherent_state({0.0, 0.0, 4.0}, g, kHbar), Error);  // too wide
  }
}

TEST_CASE("coherent states are minimum-uncertainty packets") {
  const Grid g(512, 40.0);
  for (const double sigma : {0.5, 1.0, 2.0}) {
    for (const double hbar : {0.5, 1.0, 2.0}) {
      const WaveFunction psi = coherent_state({0.7, -0.9, sigma}, g, hbar);
      const double dx = std::sqrt(variance_x(psi));
      const double dp = std::sqrt(variance_p(psi, hbar));
      CHECK(dx * dp == doctest::Approx(hbar / 2.0).epsilon(1e-4));
    }
  }
}

TEST_CASE("partial trace over the environment") {
  const Grid g(64, 16.0);

  SUBCASE("product state reduces to the pure system projector") {
    const WaveFunction psi = coherent_state({0.3, 0.5, 1.0}, g, kHbar);
    Eigen::VectorXcd chi(4);
    chi << 0.5, complex<double>(0.0, 0.5), 0.5, -0.5;
    const CompositeState full = CompositeState::product(psi, chi);
    const DensityMatrix rho = partial_trace_env(full);
    const Eigen::MatrixXcd expected = psi.amplitudes * psi.amplitudes.adjoint();
    CHECK((rho.elements - expected).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(rho.trace_real() == doctest::Approx(1.0).epsilon(1e-10));
  }

  SUBCASE("two orthogonal branches give a rank-2 mixture with purity 1/2") {
    const WaveFunction psi1 = coherent_state({-3.0, 0.0, 0.7}, g, kHbar);
    const WaveFunction psi2 = coherent_state({3.0, 0.0, 0.7}, g, kHbar);
    // <psi1|psi2> ~ exp(-36/(8*0.49)) ~ 1e-40: orthogonal for our purposes.
    const int n = g.n_points;
    Eigen::VectorXcd amp(2 * n);
    amp.segment(0, n) = psi1.amplitudes / std::sqrt(2.0);
    amp.segment(n, n) = psi2.amplitudes / std::sqrt(2.0);
    const CompositeState state(g, 1, amp);
    const DensityMatrix rho = partial_trace_env(state);
    CHECK(rho.trace_real() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(rho.purity() == doctest::Approx(0.5).epsilon(1e-8));
    const Eigen::MatrixXcd expected =
        0.5 * (psi1.amplitudes * psi1.amplitudes.adjoint() +
               psi2.amplitudes * psi2.amplitudes.adjoint());
    CHECK((rho.elements - expected).cwiseAbs().maxCoeff() < 1e-10);
  }

  SUBCASE("random composite state: trace one, positive, matches dense oracle") {
    auto rng = oracle::seeded_rng(2024);
    const int qubits = 3, n = g.n_points;
    Eigen::VectorXcd amp = oracle::random_state(n * (1 << qubits), rng);
    amp /= std::sqrt(g.spacing());  // continuum normalization
    const CompositeState state(g, qubits, amp);
    const DensityMatrix rho = partial_trace_env(state);
    CHECK(rho.trace_real() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(rho.hermiticity_error() < 1e-12);
    CHECK(rho.min_eigenvalue() >= -1e-10);
    const Eigen::MatrixXcd dense = oracle::dense_partial_trace(amp, n, 1 << qubits);
    CHECK((rho.elements - dense).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("expectation values on density matrices") {
  const Grid g(128, 20.0);

  SUBCASE("identity has unit expectation") {
    const WaveFunction psi = coherent_state({1.0, 0.0, 1.0}, g, kHbar);
    const DensityMatrix rho = DensityMatrix::from_pure(psi);
    const Eigen::MatrixXcd ident =
        Eigen::MatrixXcd::Identity(g.n_points, g.n_points) / g.spacing();
    CHECK(expectation(ident, rho) == doctest::Approx(1.0).epsilon(1e-10));
  }

  SUBCASE("X on a centered symmetric mixture vanishes") {
    const WaveFunction a = coherent_state({2.0, 0.0, 1.0}, g, kHbar);
    const WaveFunction b = coherent_state({-2.0, 0.0, 1.0}, g, kHbar);
    DensityMatrix rho(g, 0.5 * (a.amplitudes * a.amplitudes.adjoint() +
                                b.amplitudes * b.amplitudes.adjoint()));
    CHECK(std::abs(expectation(position_operator(g), rho)) < 1e-10);
  }

  SUBCASE("X^2 on a coherent state matches the Gaussian moment") {
    const double q = 1.3, sigma = 0.9;
    const WaveFunction psi = coherent_state({q, -0.4, sigma}, g, kHbar);
    const DensityMatrix rho = DensityMatrix::from_pure(psi);
    const Eigen::VectorXd x = position_operator(g);
    const double expected = oracle::gaussian_x2_moment(q, sigma);
    CHECK(expectation(Eigen::VectorXd(x.array().square()), rho) ==
          doctest::Approx(expected).epsilon(1e-6));
  }
}

TEST_CASE("normalization contracts hold after construction") {
  const Grid g(128, 20.0);
  const WaveFunction psi = coherent_state({0.2, 0.1, 1.0}, g, kHbar);
  CHECK(psi.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));

  CompositeState c = CompositeState::product(psi, env_plus_state(2));
  CHECK(c.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));

  c.amplitudes *= 3.7;
  c.normalize();
  CHECK(c.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
}
