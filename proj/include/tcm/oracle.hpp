#pragma once

#include <Eigen/Dense>

#include "tcm/amplitudes.hpp"

namespace tcm {

// Independent ground truth: the full interaction-picture Hamiltonian on the
// truncated product basis {atom 1..4} x {Fock 0..cutoff+2}, evolved by dense
// Hermitian eigendecomposition. Joint index = atom * (cutoff+3) + m.

int joint_dim(const ModelConfig& config);

Eigen::MatrixXcd build_hamiltonian(const ModelConfig& config);

Eigen::VectorXcd initial_joint_state(const ModelConfig& config);

// Arbitrary field vector over the Fock basis (testing hook).
Eigen::VectorXcd initial_joint_state(const ModelConfig& config,
                                     const Eigen::VectorXd& field);

class Propagator {
 public:
  explicit Propagator(const Eigen::MatrixXcd& hamiltonian);
  // exp(-i H t) psi0; the decomposition is computed once, any t is cheap.
  Eigen::VectorXcd evolve(const Eigen::VectorXcd& psi0, double t) const;

 private:
  Eigen::VectorXd energies_;
  Eigen::MatrixXcd vectors_;
};

Eigen::VectorXcd to_joint(const AmplitudeTable& tab);

Eigen::Matrix4cd atomic_from_joint(const Eigen::VectorXcd& psi);
Eigen::MatrixXcd field_from_joint(const Eigen::VectorXcd& psi);

struct CompareReport {
  double amplitude = 0.0;  // max componentwise deviation after phase alignment
  double rho = 0.0;        // max entrywise atomic density deviation
  double f1 = 0.0, f2 = 0.0;
  double entropy = 0.0;
  double husimi = 0.0;  // max Q deviation over a ring of sample points
};

// Aligns the oracle's global phase on the largest shared amplitude before
// differencing; observable-level deviations are phase-free anyway.
CompareReport compare(const AmplitudeTable& tab, const Eigen::VectorXcd& psi);

}  // namespace tcm
