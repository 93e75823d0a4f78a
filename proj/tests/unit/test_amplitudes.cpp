#include <cmath>
#include <random>

#include <doctest.h>

#include "tcm/amplitudes.hpp"

using namespace tcm;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

ModelConfig config_for(double chi, double delta, double p = 0.5,
                       double order = 5.0) {
  return make_config(p, order, Complex(kInvSqrt2, 0.0), Complex(0.0, kInvSqrt2),
                     chi, delta);
}

// Matrix-exponential oracle for one block, in the same (seed, per-component
// transfer, two-transfer) convention as the closed form.
Eigen::Vector3cd evolve_block_directly(const BranchParams& bp, Complex gamma,
                                       double t) {
  const double r2 = std::sqrt(2.0);
  Eigen::Matrix3d h;
  h << bp.alpha1, r2 * bp.gamma1, 0.0,
       r2 * bp.gamma1, bp.alpha2, r2 * bp.gamma2,
       0.0, r2 * bp.gamma2, bp.alpha3;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(h);
  Eigen::Vector3cd psi0(gamma, 0.0, 0.0);
  Eigen::Vector3cd modal = solver.eigenvectors().transpose() * psi0;
  for (int k = 0; k < 3; ++k)
    modal(k) *= std::polar(1.0, -solver.eigenvalues()(k) * t);
  Eigen::Vector3cd psi = solver.eigenvectors() * modal;
  psi(1) /= r2;
  return psi;
}

}  // namespace

TEST_CASE("initial weights satisfy the three seed identities") {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> chi_dist(0.0, 5.0);
  std::uniform_real_distribution<double> delta_dist(-8.0, 8.0);
  std::uniform_int_distribution<int> n_dist(0, 8);
  const Complex gamma(0.3, -0.7);
  for (int trial = 0; trial < 100; ++trial) {
    const ModelConfig config = config_for(chi_dist(rng), delta_dist(rng));
    const auto bp = branch_parameters(config, n_dist(rng), Group::Excited);
    const auto eig = eigenfrequencies(cubic_invariants(*bp));
    REQUIRE(eig.has_value());
    const auto weights = initial_weights(gamma, *bp, *eig);

    Complex sum(0, 0), linear(0, 0), quadratic(0, 0);
    for (int k = 0; k < 3; ++k) {
      const double eta = eig->eta[k];
      sum += weights[k];
      linear += weights[k] * (eta + bp->alpha3);
      quadratic += weights[k] *
                   (eta * eta - 2.0 * bp->gamma2 * bp->gamma2 +
                    (bp->alpha2 + bp->alpha3) * eta + bp->alpha2 * bp->alpha3);
    }
    CHECK(std::abs(sum) < 1e-10);                 // two-transfer starts empty
    CHECK(std::abs(linear) < 1e-9);               // one-transfer starts empty
    quadratic /= 2.0 * bp->gamma1 * bp->gamma2;
    CHECK(std::abs(quadratic - gamma) < 1e-10);   // seed starts at gamma
  }
}

TEST_CASE("initial weights reject (near-)repeated eigenfrequencies") {
  const ModelConfig config = config_for(0.0, 0.0);
  const auto bp = branch_parameters(config, 0, Group::Excited);
  EigenTriple degenerate;
  degenerate.eta = {2.0, 2.0 + 1e-12, -4.0};
  CHECK_THROWS(initial_weights(Complex(1.0, 0.0), *bp, degenerate));
}

TEST_CASE("misreading the weight denominators as products breaks the seed") {
  const ModelConfig config = config_for(0.0, 10.0);
  const auto bp = branch_parameters(config, 0, Group::Excited);
  const auto eig = eigenfrequencies(cubic_invariants(*bp));
  REQUIRE(eig.has_value());
  Complex sum(0, 0);
  for (int k = 0; k < 3; ++k) {
    const int r = (k + 1) % 3;
    const int s = (k + 2) % 3;
    sum += 2.0 * bp->gamma1 * bp->gamma2 /
           ((eig->eta[k] * eig->eta[r]) * (eig->eta[k] * eig->eta[s]));
  }
  CHECK(std::abs(sum) > 1e-3);  // the faulty reading fails D(0) = 0
}

TEST_CASE("excited group: initial condition and block unitarity") {
  const ModelConfig config = config_for(0.0, 0.0);
  const Eigen::Vector3cd at0 = excited_group(3, 0.0, config);
  CHECK(std::abs(at0(0) - config.atoms.gamma1) < 1e-12);
  CHECK(std::abs(at0(1)) < 1e-12);
  CHECK(std::abs(at0(2)) < 1e-12);

  const double expected = std::norm(config.atoms.gamma1);
  for (const double t : {0.3, 1.9, 7.7, 23.0}) {
    const Eigen::Vector3cd v = excited_group(0, t, config);
    const double prob =
        std::norm(v(0)) + 2.0 * std::norm(v(1)) + std::norm(v(2));
    CHECK(std::abs(prob - expected) < 1e-12);
  }
}

TEST_CASE("excited group matches the matrix-exponential oracle") {
  const ModelConfig config = config_for(0.5, 5.0);
  const auto bp = branch_parameters(config, 5, Group::Excited);
  const Eigen::Vector3cd closed = excited_group(5, 3.7, config);
  const Eigen::Vector3cd direct =
      evolve_block_directly(*bp, config.atoms.gamma1, 3.7);
  CHECK((closed - direct).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("ground group: initial condition and low-n blocks") {
  const ModelConfig config = config_for(0.0, 0.0);
  for (const int n : {0, 1, 2, 5}) {
    const Eigen::Vector3cd at0 = ground_group(n, 0.0, config);
    CHECK(std::abs(at0(0) - config.atoms.gamma4) < 1e-12);
    CHECK(std::abs(at0(1)) < 1e-12);
    CHECK(std::abs(at0(2)) < 1e-12);
  }
  // No photon to absorb: the n = 0 block only rotates a phase.
  for (const double t : {0.6, 4.2, 19.0}) {
    const Eigen::Vector3cd v = ground_group(0, t, config);
    CHECK(std::abs(std::abs(v(0)) - std::abs(config.atoms.gamma4)) < 1e-12);
    CHECK(std::abs(v(1)) == 0.0);
    CHECK(std::abs(v(2)) == 0.0);
  }
}

TEST_CASE("ground group matches the matrix-exponential oracle") {
  const ModelConfig config = config_for(5.0, 0.0);
  const auto bp = branch_parameters(config, 4, Group::Ground);
  const Eigen::Vector3cd closed = ground_group(4, 1.2, config);
  const Eigen::Vector3cd direct =
      evolve_block_directly(*bp, config.atoms.gamma4, 1.2);
  CHECK((closed - direct).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("ground group n = 1 matches a direct two-level evolution") {
  const ModelConfig config = config_for(2.0, 3.0);
  const double r2 = std::sqrt(2.0);
  Eigen::Matrix2d h;
  h << -config.delta + nonlinear_shift(config.chi, 1), r2, r2, 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(h);
  for (const double t : {0.9, 6.4}) {
    Eigen::Vector2cd modal =
        solver.eigenvectors().transpose() *
        Eigen::Vector2cd(config.atoms.gamma4, 0.0);
    for (int k = 0; k < 2; ++k)
      modal(k) *= std::polar(1.0, -solver.eigenvalues()(k) * t);
    const Eigen::Vector2cd direct = solver.eigenvectors() * modal;
    const Eigen::Vector3cd closed = ground_group(1, t, config);
    CHECK(std::abs(closed(0) - direct(0)) < 1e-12);
    CHECK(std::abs(closed(1) - direct(1) / r2) < 1e-12);
    CHECK(std::abs(closed(2)) == 0.0);
  }
}

TEST_CASE("every block kind tracks direct diagonalization out to t = 50") {
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> chi_dist(0.0, 5.0);
  std::uniform_real_distribution<double> delta_dist(-10.0, 10.0);
  std::uniform_real_distribution<double> t_dist(0.0, 50.0);
  std::uniform_int_distribution<int> n_dist(2, 9);
  for (int trial = 0; trial < 40; ++trial) {
    const ModelConfig config = config_for(chi_dist(rng), delta_dist(rng));
    const int n = n_dist(rng);
    const double t = t_dist(rng);
    const Group group = trial % 2 == 0 ? Group::Excited : Group::Ground;
    const Complex gamma =
        group == Group::Excited ? config.atoms.gamma1 : config.atoms.gamma4;
    const auto bp = branch_parameters(config, n, group);
    const Eigen::Vector3cd closed = evaluate_block(block_modes(config, n, group), t);
    const Eigen::Vector3cd direct = evolve_block_directly(*bp, gamma, t);
    CHECK((closed - direct).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("state vector: initial table, norms, excitation") {
  for (const auto& [chi, delta] : {std::pair{0.0, 0.0}, {5.0, 5.0}}) {
    const ModelConfig config = config_for(chi, delta);
    const SpectralCache cache(config);

    const AmplitudeTable at0 = cache.state_vector(0.0);
    for (int n = 0; n <= at0.cutoff; ++n) {
      CHECK(std::abs(at0.A[n] - config.atoms.gamma1) < 1e-12);
      CHECK(std::abs(at0.E[n] - config.atoms.gamma4) < 1e-12);
    }
    CHECK(at0.B.cwiseAbs().maxCoeff() < 1e-12);
    CHECK(at0.D.cwiseAbs().maxCoeff() < 1e-12);
    CHECK(at0.G.cwiseAbs().maxCoeff() < 1e-12);
    CHECK(at0.H.cwiseAbs().maxCoeff() < 1e-12);
    CHECK(&at0.C() == &at0.B);
    CHECK(&at0.F() == &at0.G);

    const double exc0 = mean_excitation(at0);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> t_dist(0.0, 30.0);
    for (int i = 0; i < 200; ++i) {
      const AmplitudeTable tab = cache.state_vector(t_dist(rng));
      CHECK(std::abs(wavefunction_norm(tab) - 1.0) < 1e-10);
      CHECK(std::abs(blockwise_norm(tab) - 1.0) < 1e-10);
      CHECK(std::abs(mean_excitation(tab) - exc0) < 1e-9);
    }
  }
}
