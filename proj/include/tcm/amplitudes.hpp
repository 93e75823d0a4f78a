#pragma once

#include <vector>

#include <Eigen/Dense>

#include "tcm/spectrum.hpp"

namespace tcm {

// Spectral solution of one (n, group) block. The time dependence is a pure
// phase sum: component(t) = sum_k coef.col(k) * exp(i eta_k t), so sweeping t
// costs only phase evaluation. Rows are (A_n, B_{n+1}, D_{n+2}) for the
// excited family and (E_n, G_{n-1}, H_{n-2}) for the ground one.
struct BlockModes {
  Group group = Group::Excited;
  int n = 0;
  int dim = 0;  // number of active modes: 1, 2 or 3
  bool closed_form = false;
  std::array<double, 3> eta{};
  Eigen::Matrix3cd coef = Eigen::Matrix3cd::Zero();
};

// Mode weights D^k(0) = 2 gamma G1 G2 / ((eta_k - eta_r)(eta_k - eta_s)).
// Throws on (near-)repeated roots; those blocks are diagonalized directly.
std::array<Complex, 3> initial_weights(Complex gamma, const BranchParams& bp,
                                       const EigenTriple& eig);

BlockModes block_modes(const ModelConfig& config, int n, Group group);

Eigen::Vector3cd evaluate_block(const BlockModes& modes, double t);

// (A_n, B_{n+1}, D_{n+2}) at Rabi angle t; C_{n+1} equals B_{n+1}.
Eigen::Vector3cd excited_group(int n, double t, const ModelConfig& config);

// (E_n, G_{n-1}, H_{n-2}) at Rabi angle t; F_{n-1} equals G_{n-1}. Entries
// whose subscript would be negative are zero.
Eigen::Vector3cd ground_group(int n, double t, const ModelConfig& config);

// Wave-function snapshot. The amplitude arrays are indexed by subscript
// (Fock-aligned, length cutoff+3): A[m] = A_m, B[m] = B_m from block m-1,
// D[m] = D_m from block m-2, E[m] = E_m, G[m] = G_m from block m+1,
// H[m] = H_m from block m+2. U, R, T are the assembled Fock components of
// the |up,up>, |up,down> (= |down,up>) and |down,down> sectors.
struct AmplitudeTable {
  double t = 0.0;
  int cutoff = 0;
  Eigen::VectorXd b;
  Eigen::VectorXcd A, B, D, E, G, H;
  Eigen::VectorXcd U, R, T;
  const Eigen::VectorXcd& C() const { return B; }  // atom-exchange symmetry
  const Eigen::VectorXcd& F() const { return G; }
};

// Immutable per-config spectral data; state_vector(t) is pure and safe to
// call concurrently for distinct times.
class SpectralCache {
 public:
  explicit SpectralCache(ModelConfig config);
  const ModelConfig& config() const { return config_; }
  AmplitudeTable state_vector(double t) const;

 private:
  ModelConfig config_;
  std::vector<BlockModes> excited_, ground_;
};

AmplitudeTable state_vector(double t, const ModelConfig& config);

double wavefunction_norm(const AmplitudeTable& tab);  // <psi|psi>
double blockwise_norm(const AmplitudeTable& tab);     // sum of block norms
double mean_excitation(const AmplitudeTable& tab);    // <n + J_z>

}  // namespace tcm
