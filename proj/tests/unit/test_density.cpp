#include <cmath>
#include <random>

#include <doctest.h>

#include "tcm/density.hpp"
#include "tcm/entropy.hpp"

using namespace tcm;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

ModelConfig standard_config(double chi, double delta, double p = 0.5,
                            double order = 5.0) {
  return make_config(p, order, Complex(kInvSqrt2, 0.0), Complex(0.0, kInvSqrt2),
                     chi, delta);
}

}  // namespace

TEST_CASE("atomic density at t = 0 is the pure Bell projector") {
  const AmplitudeTable tab = state_vector(0.0, standard_config(0.0, 0.0));
  const Eigen::Matrix4cd rho = atomic_density(tab);
  CHECK(std::abs(rho(0, 0) - 0.5) < 1e-12);
  CHECK(std::abs(rho(3, 3) - 0.5) < 1e-12);
  CHECK(std::abs(rho(0, 3) - Complex(0.0, -0.5)) < 1e-12);
  CHECK(std::abs(rho(1, 1)) < 1e-12);
  CHECK(std::abs(rho(2, 2)) < 1e-12);
  CHECK(std::abs(rho(0, 1)) < 1e-12);
  CHECK(std::abs(rho(1, 3)) < 1e-12);
}

TEST_CASE("atomic density: trace, hermiticity, symmetry, positivity") {
  const SpectralCache cache(standard_config(0.5, 3.0));
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> t_dist(0.0, 30.0);
  for (int i = 0; i < 50; ++i) {
    const Eigen::Matrix4cd rho = atomic_density(cache.state_vector(t_dist(rng)));
    CHECK(std::abs(rho.trace().real() - 1.0) < 1e-10);
    CHECK((rho - rho.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(rho(1, 1) - rho(2, 2)) < 1e-12);
    CHECK(std::abs(rho(0, 1) - rho(0, 2)) < 1e-12);
    CHECK(std::abs(rho(1, 3) - rho(2, 3)) < 1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(rho);
    CHECK(solver.eigenvalues().minCoeff() > -1e-10);
    const double purity = (rho * rho).trace().real();
    CHECK(purity > 0.25 - 1e-12);
    CHECK(purity < 1.0 + 1e-10);
  }
}

TEST_CASE("summation formulas agree with the direct inner products") {
  // The index shifts in the summation route are easy to break; lock the two
  // constructions together over a spread of configurations.
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> p_dist(0.2, 0.95);
  std::uniform_int_distribution<int> order_dist(2, 24);
  std::uniform_real_distribution<double> chi_dist(0.0, 5.0);
  std::uniform_real_distribution<double> delta_dist(-10.0, 10.0);
  std::uniform_real_distribution<double> t_dist(0.0, 30.0);
  std::normal_distribution<double> amp_dist(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    Complex g1(amp_dist(rng), amp_dist(rng));
    Complex g4(amp_dist(rng), amp_dist(rng));
    const double norm = std::sqrt(std::norm(g1) + std::norm(g4));
    g1 /= norm;
    g4 /= norm;
    const ModelConfig config =
        make_config(p_dist(rng), order_dist(rng), g1, g4, chi_dist(rng),
                    delta_dist(rng));
    const AmplitudeTable tab = state_vector(t_dist(rng), config);
    const Eigen::Matrix4cd direct = atomic_density(tab);
    const Eigen::Matrix4cd summed = atomic_density_summation(tab);
    CHECK((direct - summed).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("field density at t = 0 projects onto the initial field state") {
  const ModelConfig config = standard_config(0.0, 0.0);
  const AmplitudeTable tab = state_vector(0.0, config);
  const Eigen::MatrixXcd rho = field_density(tab);
  CHECK(std::abs(rho.trace().real() - 1.0) < 1e-12);
  Eigen::VectorXcd field = Eigen::VectorXcd::Zero(rho.rows());
  for (int n = 0; n <= config.field.cutoff; ++n) field(n) = config.field.coeffs(n);
  const Eigen::MatrixXcd projector = field * field.adjoint();
  CHECK((rho - projector).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("field and atomic entropies coincide for the pure joint state") {
  const SpectralCache cache(standard_config(5.0, 5.0));
  for (const double t : {0.0, 0.8, 2.5, 13.0}) {
    const AmplitudeTable tab = cache.state_vector(t);
    const double s_atom = atomic_entropy(atomic_density(tab));
    const double s_field = field_entropy(field_density(tab));
    CHECK(std::abs(s_atom - s_field) < 1e-8);
  }
}
