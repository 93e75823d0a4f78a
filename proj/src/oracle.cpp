#include "tcm/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "tcm/density.hpp"
#include "tcm/entropy.hpp"
#include "tcm/husimi.hpp"
#include "tcm/observables.hpp"

namespace tcm {

namespace {

constexpr double kJz[4] = {1.0, 0.0, 0.0, -1.0};

// (upper, lower) atomic pairs with a unit J+ matrix element.
constexpr int kLadderPairs[4][2] = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};

}  // namespace

int joint_dim(const ModelConfig& config) {
  return 4 * (config.field.cutoff + 3);
}

Eigen::MatrixXcd build_hamiltonian(const ModelConfig& config) {
  const int fock = config.field.cutoff + 3;
  const int dim = 4 * fock;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (int a = 0; a < 4; ++a)
    for (int m = 0; m < fock; ++m)
      h(a * fock + m, a * fock + m) =
          config.delta * kJz[a] + nonlinear_shift(config.chi, m);
  // J- a^dag + J+ a, rotating-wave ladder between adjacent Fock levels.
  for (const auto& pair : kLadderPairs) {
    const int upper = pair[0], lower = pair[1];
    for (int m = 0; m + 1 < fock; ++m) {
      const double g = std::sqrt(m + 1.0);
      h(upper * fock + m, lower * fock + m + 1) += g;
      h(lower * fock + m + 1, upper * fock + m) += g;
    }
  }
  return h;
}

Eigen::VectorXcd initial_joint_state(const ModelConfig& config,
                                     const Eigen::VectorXd& field) {
  const int fock = config.field.cutoff + 3;
  if (field.size() > fock)
    throw std::invalid_argument("initial_joint_state: field vector too long");
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4 * fock);
  for (int m = 0; m < field.size(); ++m) {
    psi(0 * fock + m) = config.atoms.gamma1 * field(m);
    psi(3 * fock + m) = config.atoms.gamma4 * field(m);
  }
  return psi;
}

Eigen::VectorXcd initial_joint_state(const ModelConfig& config) {
  return initial_joint_state(config, config.field.coeffs);
}

Propagator::Propagator(const Eigen::MatrixXcd& hamiltonian) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hamiltonian);
  energies_ = solver.eigenvalues();
  vectors_ = solver.eigenvectors();
}

Eigen::VectorXcd Propagator::evolve(const Eigen::VectorXcd& psi0,
                                    double t) const {
  if (psi0.size() != vectors_.rows())
    throw std::invalid_argument("Propagator::evolve: dimension mismatch");
  Eigen::VectorXcd modal = vectors_.adjoint() * psi0;
  for (int i = 0; i < modal.size(); ++i)
    modal(i) *= std::polar(1.0, -energies_(i) * t);
  return vectors_ * modal;
}

Eigen::VectorXcd to_joint(const AmplitudeTable& tab) {
  const int fock = static_cast<int>(tab.U.size());
  Eigen::VectorXcd psi(4 * fock);
  psi.segment(0 * fock, fock) = tab.U;
  psi.segment(1 * fock, fock) = tab.R;
  psi.segment(2 * fock, fock) = tab.R;
  psi.segment(3 * fock, fock) = tab.T;
  return psi;
}

Eigen::Matrix4cd atomic_from_joint(const Eigen::VectorXcd& psi) {
  const int fock = static_cast<int>(psi.size()) / 4;
  Eigen::Matrix4cd rho;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      rho(a, b) = psi.segment(b * fock, fock).dot(psi.segment(a * fock, fock));
  return rho;
}

Eigen::MatrixXcd field_from_joint(const Eigen::VectorXcd& psi) {
  const int fock = static_cast<int>(psi.size()) / 4;
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(fock, fock);
  for (int a = 0; a < 4; ++a)
    rho += psi.segment(a * fock, fock) * psi.segment(a * fock, fock).adjoint();
  return rho;
}

CompareReport compare(const AmplitudeTable& tab, const Eigen::VectorXcd& psi) {
  const Eigen::VectorXcd closed = to_joint(tab);
  if (closed.size() != psi.size())
    throw std::invalid_argument("compare: mismatched cutoffs");

  Eigen::Index imax = 0;
  psi.cwiseAbs().maxCoeff(&imax);
  Complex phase(1.0, 0.0);
  if (std::abs(psi(imax)) > 0.0 && std::abs(closed(imax)) > 0.0) {
    const Complex ratio = closed(imax) / psi(imax);
    phase = ratio / std::abs(ratio);
  }

  CompareReport report;
  report.amplitude = (closed - phase * psi).cwiseAbs().maxCoeff();

  const Eigen::Matrix4cd rho_closed = atomic_density(tab);
  const Eigen::Matrix4cd rho_oracle = atomic_from_joint(psi);
  report.rho = (rho_closed - rho_oracle).cwiseAbs().maxCoeff();

  const SqueezingValues sq_closed = squeezing_parameters(rho_closed);
  const SqueezingValues sq_oracle = squeezing_parameters(rho_oracle);
  report.f1 = std::abs(sq_closed.f1 - sq_oracle.f1);
  report.f2 = std::abs(sq_closed.f2 - sq_oracle.f2);
  report.entropy =
      std::abs(atomic_entropy(rho_closed) - atomic_entropy(rho_oracle));

  // Q on a ring around the field's occupation radius, oracle side through
  // the field density quadratic form.
  const Eigen::MatrixXcd rho_field = field_from_joint(psi);
  const int fock = static_cast<int>(tab.U.size());
  double photons = 0.0;
  for (int m = 0; m < fock; ++m)
    photons += m * (std::norm(tab.U[m]) + 2.0 * std::norm(tab.R[m]) +
                    std::norm(tab.T[m]));
  const double radius = std::sqrt(std::max(photons, 1.0));
  for (int j = 0; j < 6; ++j) {
    const Complex alpha = std::polar(radius, j * kPi / 3.0);
    const Eigen::VectorXcd row = coherent_overlap_row(alpha, fock);
    const Complex quad = (row.transpose() * rho_field * row.conjugate())(0);
    const double dev =
        std::abs(q_value(alpha, tab, QMode::FourTerm) - quad.real() / kPi);
    report.husimi = std::max(report.husimi, dev);
  }
  return report;
}

}  // namespace tcm
