#include "tcm/amplitudes.hpp"

#include <cmath>
#include <stdexcept>

namespace tcm {

namespace {

constexpr double kRootGapTol = 1e-7;
const double kSqrt2 = std::sqrt(2.0);

double max_abs_eta(const std::array<double, 3>& eta) {
  return std::max({std::abs(eta[0]), std::abs(eta[1]), std::abs(eta[2])});
}

bool roots_well_separated(const std::array<double, 3>& eta) {
  const double scale = max_abs_eta(eta);
  if (scale == 0.0) return false;
  const double gap = std::min({std::abs(eta[0] - eta[1]),
                               std::abs(eta[0] - eta[2]),
                               std::abs(eta[1] - eta[2])});
  return gap >= kRootGapTol * scale;
}

// Direct evolution of a 1-3 level block. The Hermitian matrix lives in the
// normalized basis (seed, symmetric one-transfer, two-transfer); the middle
// row of the returned coefficients is rescaled back to the per-component
// amplitude convention (B and G multiply each of |up,down> and |down,up>).
BlockModes diagonalize_block(const Eigen::MatrixXd& hermitian, Complex gamma,
                             Group group, int n) {
  const int dim = static_cast<int>(hermitian.rows());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hermitian);
  BlockModes modes;
  modes.group = group;
  modes.n = n;
  modes.dim = dim;
  modes.closed_form = false;
  for (int k = 0; k < dim; ++k) {
    modes.eta[k] = -solver.eigenvalues()(k);
    const Eigen::VectorXd v = solver.eigenvectors().col(k);
    const Complex weight = v(0) * gamma;  // <v|psi(0)>, seed component only
    for (int i = 0; i < dim; ++i) {
      Complex c = v(i) * weight;
      if (i == 1) c /= kSqrt2;
      modes.coef(i, k) = c;
    }
  }
  return modes;
}

Eigen::MatrixXd block_matrix(const BranchParams& bp) {
  Eigen::MatrixXd h(3, 3);
  h << bp.alpha1, kSqrt2 * bp.gamma1, 0.0,
       kSqrt2 * bp.gamma1, bp.alpha2, kSqrt2 * bp.gamma2,
       0.0, kSqrt2 * bp.gamma2, bp.alpha3;
  return h;
}

}  // namespace

std::array<Complex, 3> initial_weights(Complex gamma, const BranchParams& bp,
                                       const EigenTriple& eig) {
  if (!roots_well_separated(eig.eta))
    throw std::invalid_argument(
        "initial_weights: (near-)repeated eigenfrequencies; block must be "
        "diagonalized directly");
  std::array<Complex, 3> weights{};
  const double pref = 2.0 * bp.gamma1 * bp.gamma2;
  for (int k = 0; k < 3; ++k) {
    const int r = (k + 1) % 3;
    const int s = (k + 2) % 3;
    weights[k] =
        gamma * pref / ((eig.eta[k] - eig.eta[r]) * (eig.eta[k] - eig.eta[s]));
  }
  return weights;
}

BlockModes block_modes(const ModelConfig& config, int n, Group group) {
  const Complex gamma =
      group == Group::Excited ? config.atoms.gamma1 : config.atoms.gamma4;
  const auto bp = branch_parameters(config, n, group);
  if (!bp) {
    // Ground blocks below n = 2: no two-transfer level exists.
    if (n == 0) {
      const double alpha1 = -config.delta + nonlinear_shift(config.chi, 0);
      BlockModes modes;
      modes.group = group;
      modes.n = n;
      modes.dim = 1;
      modes.eta[0] = -alpha1;
      modes.coef(0, 0) = gamma;
      return modes;
    }
    Eigen::MatrixXd h(2, 2);
    const double alpha1 = -config.delta + nonlinear_shift(config.chi, 1);
    const double alpha2 = nonlinear_shift(config.chi, 0);
    h << alpha1, kSqrt2, kSqrt2, alpha2;  // gamma1 = sqrt(1)
    return diagonalize_block(h, gamma, group, n);
  }

  // Solve the centered block: with large Kerr shifts the raw invariants grow
  // like alpha^3 and the cubic cannot be evaluated to useful absolute
  // accuracy in double. Root differences and every coefficient bracket are
  // shift-invariant, so only the stored frequency needs the shift back.
  const double mean = (bp->alpha1 + bp->alpha2 + bp->alpha3) / 3.0;
  BranchParams centered = *bp;
  centered.alpha1 -= mean;
  centered.alpha2 -= mean;
  centered.alpha3 -= mean;

  const auto eig = eigenfrequencies(cubic_invariants(centered));
  if (!eig || !roots_well_separated(eig->eta)) {
    BlockModes modes =
        diagonalize_block(block_matrix(centered), gamma, group, n);
    for (int k = 0; k < modes.dim; ++k) modes.eta[k] -= mean;
    return modes;
  }

  const auto weights = initial_weights(gamma, centered, *eig);
  BlockModes modes;
  modes.group = group;
  modes.n = n;
  modes.dim = 3;
  modes.closed_form = true;
  const double g2s = centered.gamma2 * centered.gamma2;
  for (int k = 0; k < 3; ++k) {
    const double eta = eig->eta[k];
    modes.eta[k] = eta - mean;
    modes.coef(2, k) = weights[k];
    modes.coef(1, k) =
        -weights[k] * (eta + centered.alpha3) / (2.0 * centered.gamma2);
    // Factored form of eta^2 + (a2 + a3) eta + a2 a3 - 2 gamma2^2.
    modes.coef(0, k) =
        weights[k] *
        ((eta + centered.alpha2) * (eta + centered.alpha3) - 2.0 * g2s) /
        (2.0 * centered.gamma1 * centered.gamma2);
  }
  return modes;
}

Eigen::Vector3cd evaluate_block(const BlockModes& modes, double t) {
  Eigen::Vector3cd out = Eigen::Vector3cd::Zero();
  for (int k = 0; k < modes.dim; ++k)
    out += modes.coef.col(k) * std::polar(1.0, modes.eta[k] * t);
  return out;
}

Eigen::Vector3cd excited_group(int n, double t, const ModelConfig& config) {
  return evaluate_block(block_modes(config, n, Group::Excited), t);
}

Eigen::Vector3cd ground_group(int n, double t, const ModelConfig& config) {
  return evaluate_block(block_modes(config, n, Group::Ground), t);
}

SpectralCache::SpectralCache(ModelConfig config) : config_(std::move(config)) {
  const int cutoff = config_.field.cutoff;
  excited_.reserve(cutoff + 1);
  ground_.reserve(cutoff + 1);
  for (int n = 0; n <= cutoff; ++n) {
    excited_.push_back(block_modes(config_, n, Group::Excited));
    ground_.push_back(block_modes(config_, n, Group::Ground));
  }
}

AmplitudeTable SpectralCache::state_vector(double t) const {
  const int cutoff = config_.field.cutoff;
  const int size = cutoff + 3;
  AmplitudeTable tab;
  tab.t = t;
  tab.cutoff = cutoff;
  tab.b = config_.field.coeffs;
  tab.A = Eigen::VectorXcd::Zero(size);
  tab.B = Eigen::VectorXcd::Zero(size);
  tab.D = Eigen::VectorXcd::Zero(size);
  tab.E = Eigen::VectorXcd::Zero(size);
  tab.G = Eigen::VectorXcd::Zero(size);
  tab.H = Eigen::VectorXcd::Zero(size);
  for (int n = 0; n <= cutoff; ++n) {
    const Eigen::Vector3cd exc = evaluate_block(excited_[n], t);
    tab.A[n] = exc(0);
    tab.B[n + 1] = exc(1);
    tab.D[n + 2] = exc(2);
    const Eigen::Vector3cd gnd = evaluate_block(ground_[n], t);
    tab.E[n] = gnd(0);
    if (n >= 1) tab.G[n - 1] = gnd(1);
    if (n >= 2) tab.H[n - 2] = gnd(2);
  }
  const auto bn = [&](int m) -> double {
    return (m >= 0 && m <= cutoff) ? tab.b[m] : 0.0;
  };
  tab.U = Eigen::VectorXcd::Zero(size);
  tab.R = Eigen::VectorXcd::Zero(size);
  tab.T = Eigen::VectorXcd::Zero(size);
  for (int m = 0; m < size; ++m) {
    tab.U[m] = bn(m) * tab.A[m] + bn(m + 2) * tab.H[m];
    tab.R[m] = bn(m - 1) * tab.B[m] + bn(m + 1) * tab.G[m];
    tab.T[m] = bn(m - 2) * tab.D[m] + bn(m) * tab.E[m];
  }
  return tab;
}

AmplitudeTable state_vector(double t, const ModelConfig& config) {
  return SpectralCache(config).state_vector(t);
}

double wavefunction_norm(const AmplitudeTable& tab) {
  return tab.U.squaredNorm() + 2.0 * tab.R.squaredNorm() + tab.T.squaredNorm();
}

double blockwise_norm(const AmplitudeTable& tab) {
  double sum = 0.0;
  for (int n = 0; n <= tab.cutoff; ++n) {
    const double b2 = tab.b[n] * tab.b[n];
    double block = std::norm(tab.A[n]) + 2.0 * std::norm(tab.B[n + 1]) +
                   std::norm(tab.D[n + 2]) + std::norm(tab.E[n]);
    if (n >= 1) block += 2.0 * std::norm(tab.G[n - 1]);
    if (n >= 2) block += std::norm(tab.H[n - 2]);
    sum += b2 * block;
  }
  return sum;
}

double mean_excitation(const AmplitudeTable& tab) {
  double photons = 0.0;
  for (int m = 0; m < tab.U.size(); ++m)
    photons += m * (std::norm(tab.U[m]) + 2.0 * std::norm(tab.R[m]) +
                    std::norm(tab.T[m]));
  const double jz = tab.U.squaredNorm() - tab.T.squaredNorm();
  return photons + jz;
}

}  // namespace tcm
