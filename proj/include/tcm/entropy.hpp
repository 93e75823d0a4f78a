#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

#include <Eigen/Dense>

#include "tcm/types.hpp"

namespace tcm {

// Coefficients of the characteristic quartic
//   c0 + c1 x + c2 x^2 + c3 x^3 + x^4 = 0
// of an atomic density matrix with the exchange symmetry rho22 = rho33,
// rho12 = rho13, rho24 = rho34.
struct QuarticCoefficients {
  double c0 = 0.0, c1 = 0.0, c2 = 0.0, c3 = 0.0;
};

QuarticCoefficients quartic_coefficients(const Eigen::Matrix4cd& rho);

// Production eigenvalue path: iterative self-adjoint solver, eigenvalues
// sorted descending and clamped to [0,1]. Rejects non-Hermitian input
// (deviation > 1e-9) and spectra outside [-1e-9, 1+1e-9].
Eigen::Vector4d eigenvalues_numeric(const Eigen::Matrix4cd& rho);

// Closed-form verification path. The quartic is split into two quadratics
//   x = (-c3/2 + f +- sqrt(z3 - z4)) / 2,  x = (-c3/2 - f +- sqrt(z3 + z4)) / 2
// with z3 = -2 c2 + 3 c3^2/4 - f^2 and z4 = (8 c1 - 4 c2 c3 + c3^3)/(4 f),
// where f^2 is a root of the resolvent cubic
//   4 F^3 + (8 c2 - 3 c3^2) F^2 + (4 (c2 - c3^2/4)^2 + 2 c3 K - 16 c0) F = K^2,
//   K = 2 c1 - c2 c3 + c3^3/4.
// Every admissible resolvent root is tried and the split with the smallest
// quartic residual wins; nullopt when no consistent choice exists.
template <typename Real>
std::optional<std::array<Real, 4>> closed_form_quartic_roots(Real c0, Real c1,
                                                             Real c2, Real c3) {
  const Real K = Real(2) * c1 - c2 * c3 + c3 * c3 * c3 / Real(4);
  const Real a2 = (Real(8) * c2 - Real(3) * c3 * c3) / Real(4);
  const Real q = c2 - c3 * c3 / Real(4);
  const Real a1 = (Real(4) * q * q + Real(2) * c3 * K - Real(16) * c0) / Real(4);
  const Real a0 = -K * K / Real(4);

  // Resolvent roots via the companion matrix; repeated roots are fine here.
  Eigen::Matrix<Real, 3, 3> comp = Eigen::Matrix<Real, 3, 3>::Zero();
  comp(1, 0) = comp(2, 1) = Real(1);
  comp(0, 2) = -a0;
  comp(1, 2) = -a1;
  comp(2, 2) = -a2;
  Eigen::EigenSolver<Eigen::Matrix<Real, 3, 3>> solver(comp);

  const Real coeff_scale =
      std::max({Real(1), std::abs(c0), std::abs(c1), std::abs(c2), std::abs(c3)});
  std::optional<std::array<Real, 4>> best;
  Real best_residual = Real(0);
  for (int i = 0; i < 3; ++i) {
    const auto root = solver.eigenvalues()(i);
    if (std::abs(root.imag()) > Real(1e-8) * std::max(Real(1), std::abs(root.real())))
      continue;
    Real big_f = root.real();
    if (big_f < Real(0)) {
      if (big_f < Real(-1e-9) * coeff_scale) continue;
      big_f = Real(0);
    }
    const Real f = std::sqrt(big_f);
    const Real z3 = -Real(2) * c2 + Real(3) * c3 * c3 / Real(4) - f * f;
    Real z4;
    if (f > Real(1e-8)) {
      z4 = (Real(8) * c1 - Real(4) * c2 * c3 + c3 * c3 * c3) / (Real(4) * f);
    } else if (std::abs(K) <= Real(1e-8) * coeff_scale) {
      z4 = Real(0);
    } else {
      continue;
    }
    std::array<Real, 4> roots{};
    bool ok = true;
    int out = 0;
    for (const Real sign : {Real(1), Real(-1)}) {
      Real rad = z3 - sign * z4;
      if (rad < Real(0)) {
        if (rad < Real(-1e-6) * std::max(Real(1), std::abs(z3) + std::abs(z4))) {
          ok = false;
          break;
        }
        rad = Real(0);
      }
      const Real sq = std::sqrt(rad);
      roots[out++] = (-c3 / Real(2) + sign * f + sq) / Real(2);
      roots[out++] = (-c3 / Real(2) + sign * f - sq) / Real(2);
    }
    if (!ok) continue;
    Real residual = Real(0);
    for (const Real x : roots) {
      const Real value = c0 + x * (c1 + x * (c2 + x * (c3 + x)));
      residual = std::max(residual, std::abs(value));
    }
    if (!best || residual < best_residual) {
      std::sort(roots.begin(), roots.end(), std::greater<Real>());
      best = roots;
      best_residual = residual;
    }
  }
  if (best && best_residual > Real(1e-8) * coeff_scale) return std::nullopt;
  return best;
}

// Wrapper used by the entropy pipeline; nullopt flags an inconsistent
// resolvent and callers fall back to the numeric path.
std::optional<Eigen::Vector4d> eigenvalues_closed_form(
    const QuarticCoefficients& c);

// S = -sum pi ln pi with 0 ln 0 = 0 (natural logarithm).
double von_neumann_entropy(const Eigen::Ref<const Eigen::VectorXd>& spectrum);

double atomic_entropy(const Eigen::Matrix4cd& rho);

// Entropy of an arbitrary Hermitian PSD trace-one matrix (the field side).
double field_entropy(const Eigen::MatrixXcd& rho);

}  // namespace tcm
