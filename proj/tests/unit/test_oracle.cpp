#include <cmath>
#include <random>

#include <doctest.h>

#include "tcm/density.hpp"
#include "tcm/oracle.hpp"

using namespace tcm;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

ModelConfig standard_config(double chi, double delta, double p = 0.5,
                            double order = 5.0) {
  return make_config(p, order, Complex(kInvSqrt2, 0.0), Complex(0.0, kInvSqrt2),
                     chi, delta);
}

}  // namespace

TEST_CASE("hamiltonian: single-excitation block spectrum on resonance") {
  const ModelConfig config = standard_config(0.0, 0.0, 0.5, 1.0);
  const Eigen::MatrixXcd h = build_hamiltonian(config);
  const int fock = config.field.cutoff + 3;
  // Subspace {|1,0>, |2,1>, |3,1>, |4,2>}: symmetric part has eigenvalues
  // {0, +-sqrt(6)}, the antisymmetric combination stays at zero.
  const int idx[4] = {0 * fock + 0, 1 * fock + 1, 2 * fock + 1, 3 * fock + 2};
  Eigen::Matrix4cd sub;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) sub(i, j) = h(idx[i], idx[j]);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(sub);
  CHECK(solver.eigenvalues()(0) == doctest::Approx(-std::sqrt(6.0)).epsilon(1e-12));
  CHECK(std::abs(solver.eigenvalues()(1)) < 1e-12);
  CHECK(std::abs(solver.eigenvalues()(2)) < 1e-12);
  CHECK(solver.eigenvalues()(3) == doctest::Approx(std::sqrt(6.0)).epsilon(1e-12));
}

TEST_CASE("hamiltonian commutes with the total excitation") {
  for (const auto& [chi, delta] : {std::pair{0.0, 0.0}, {5.0, 5.0}, {0.5, 10.0}}) {
    const ModelConfig config = standard_config(chi, delta);
    const Eigen::MatrixXcd h = build_hamiltonian(config);
    const int fock = config.field.cutoff + 3;
    const double jz[4] = {1.0, 0.0, 0.0, -1.0};
    Eigen::VectorXd excitation(4 * fock);
    for (int a = 0; a < 4; ++a)
      for (int m = 0; m < fock; ++m) excitation(a * fock + m) = m + jz[a];
    const Eigen::MatrixXcd commutator =
        h * excitation.asDiagonal() - excitation.asDiagonal() * h;
    CHECK(commutator.cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("hamiltonian: the vacuum ground column is purely diagonal") {
  const ModelConfig config = standard_config(0.7, 3.5);
  const Eigen::MatrixXcd h = build_hamiltonian(config);
  const int fock = config.field.cutoff + 3;
  const int col = 3 * fock + 0;  // |down,down; 0>
  for (int row = 0; row < h.rows(); ++row) {
    if (row == col)
      CHECK(h(row, col) == Complex(-config.delta, 0.0));
    else
      CHECK(std::abs(h(row, col)) == 0.0);
  }
}

TEST_CASE("propagator: identity at t = 0 and unitary at all t") {
  const ModelConfig config = standard_config(0.5, 5.0);
  const Propagator propagator(build_hamiltonian(config));
  const Eigen::VectorXcd psi0 = initial_joint_state(config);
  CHECK((propagator.evolve(psi0, 0.0) - psi0).cwiseAbs().maxCoeff() < 1e-12);
  for (const double t : {0.5, 5.0, 20.0})
    CHECK(std::abs(propagator.evolve(psi0, t).norm() - 1.0) < 1e-12);
}

TEST_CASE("single seeded block reproduces the closed-form amplitudes") {
  const ModelConfig config =
      make_config(0.5, 1.0, Complex(1.0, 0.0), Complex(0.0, 0.0), 0.0, 0.0);
  const Propagator propagator(build_hamiltonian(config));
  Eigen::VectorXd field = Eigen::VectorXd::Zero(1);
  field(0) = 1.0;  // exactly |up,up; 0>
  const Eigen::VectorXcd psi0 = initial_joint_state(config, field);
  const int fock = config.field.cutoff + 3;
  for (const double t : {0.4, 2.2, 9.0}) {
    const Eigen::VectorXcd psi = propagator.evolve(psi0, t);
    const Eigen::Vector3cd closed = excited_group(0, t, config);
    CHECK(std::abs(psi(0 * fock + 0) - closed(0)) < 1e-10);
    CHECK(std::abs(psi(1 * fock + 1) - closed(1)) < 1e-10);
    CHECK(std::abs(psi(2 * fock + 1) - closed(1)) < 1e-10);
    CHECK(std::abs(psi(3 * fock + 2) - closed(2)) < 1e-10);
  }
}

TEST_CASE("closed form equals the oracle across parameter settings") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> t_dist(0.0, 30.0);
  for (const auto& [chi, delta] : {std::pair{0.0, 0.0}, {5.0, 5.0}}) {
    const ModelConfig config = standard_config(chi, delta);
    const SpectralCache cache(config);
    const Propagator propagator(build_hamiltonian(config));
    const Eigen::VectorXcd psi0 = initial_joint_state(config);
    for (int i = 0; i < 10; ++i) {
      const double t = t_dist(rng);
      const CompareReport report =
          compare(cache.state_vector(t), propagator.evolve(psi0, t));
      CHECK(report.amplitude < 1e-8);
      CHECK(report.rho < 1e-8);
      CHECK(report.f1 < 1e-8);
      CHECK(report.f2 < 1e-8);
      CHECK(report.entropy < 1e-8);
      CHECK(report.husimi < 1e-8);
    }
  }
}

TEST_CASE("compare: zero at t = 0 and insensitive to a global oracle phase") {
  const ModelConfig config = standard_config(0.5, 3.0);
  const SpectralCache cache(config);
  const Propagator propagator(build_hamiltonian(config));
  const Eigen::VectorXcd psi0 = initial_joint_state(config);

  CHECK(compare(cache.state_vector(0.0), psi0).amplitude < 1e-14);

  const double t = 2.6;
  const Eigen::VectorXcd psi = propagator.evolve(psi0, t);
  const CompareReport plain = compare(cache.state_vector(t), psi);
  const CompareReport rotated =
      compare(cache.state_vector(t), std::polar(1.0, 0.8) * psi);
  CHECK(std::abs(plain.amplitude - rotated.amplitude) < 1e-12);
}

TEST_CASE("compare rejects mismatched cutoffs") {
  const ModelConfig small = standard_config(0.0, 0.0, 0.5, 1.0);
  const ModelConfig large = standard_config(0.0, 0.0, 0.5, 5.0);
  CHECK_THROWS(compare(state_vector(0.0, small), initial_joint_state(large)));
}

TEST_CASE("oracle partial traces match the density module") {
  const ModelConfig config = standard_config(0.9, 1.7);
  const SpectralCache cache(config);
  const Propagator propagator(build_hamiltonian(config));
  const Eigen::VectorXcd psi0 = initial_joint_state(config);
  for (const double t : {2.0, 11.3}) {
    const AmplitudeTable tab = cache.state_vector(t);
    const Eigen::VectorXcd psi = propagator.evolve(psi0, t);
    CHECK((atomic_density(tab) - atomic_from_joint(psi)).cwiseAbs().maxCoeff() <
          1e-8);
    CHECK((field_density(tab) - field_from_joint(psi)).cwiseAbs().maxCoeff() <
          1e-8);
  }
}

TEST_CASE("dropping the two-level ground block is caught by the oracle") {
  const ModelConfig config = standard_config(0.5, 2.0);
  const SpectralCache cache(config);
  const Propagator propagator(build_hamiltonian(config));
  const Eigen::VectorXcd psi0 = initial_joint_state(config);
  const double t = 1.2;

  AmplitudeTable broken = cache.state_vector(t);
  // Faulty variant: treat n = 1 like the trivial n = 0 block (phase only,
  // no transfer into G_0).
  const double alpha1 = -config.delta + nonlinear_shift(config.chi, 1);
  broken.E[1] = config.atoms.gamma4 * std::polar(1.0, -alpha1 * t);
  broken.G[0] = 0.0;
  const auto bn = [&](int m) -> double {
    return (m >= 0 && m <= broken.cutoff) ? broken.b[m] : 0.0;
  };
  for (int m = 0; m < broken.U.size(); ++m) {
    broken.U[m] = bn(m) * broken.A[m] + bn(m + 2) * broken.H[m];
    broken.R[m] = bn(m - 1) * broken.B[m] + bn(m + 1) * broken.G[m];
    broken.T[m] = bn(m - 2) * broken.D[m] + bn(m) * broken.E[m];
  }

  const Eigen::VectorXcd psi = propagator.evolve(psi0, t);
  CHECK(compare(cache.state_vector(t), psi).amplitude < 1e-8);
  CHECK(compare(broken, psi).amplitude > 1e-3);
}
