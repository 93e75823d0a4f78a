#pragma once

#include <array>
#include <cmath>
#include <optional>

#include "tcm/states.hpp"
#include "tcm/types.hpp"

namespace tcm {

// Which amplitude family a photon-number block belongs to: Excited blocks are
// seeded by |up,up;n>, Ground blocks by |down,down;n>.
enum class Group { Excited, Ground };

struct BranchParams {
  double alpha1 = 0.0;  // energy of the seed level
  double alpha2 = 0.0;  // energy after one photon transfer
  double alpha3 = 0.0;  // energy after two photon transfers
  double gamma1 = 0.0;  // first-rung coupling
  double gamma2 = 0.0;  // second-rung coupling
  Group group = Group::Excited;
  int n = 0;
};

struct CubicInvariants {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;
};

struct EigenTriple {
  std::array<double, 3> eta{};    // roots of eta^3 + x1 eta^2 + x2 eta + x3
  std::array<double, 3> theta{};  // angles used by the trigonometric form
  double x1 = 0.0, x2 = 0.0, x3 = 0.0;
};

// Kerr shift f(chi, n) = chi n(n-1) + 2 sqrt(chi) n.
double nonlinear_shift(double chi, int n);

// Ground blocks with n < 2 are 1- or 2-dimensional and carry no full
// parameter set; they come back as nullopt and are evolved directly.
std::optional<BranchParams> branch_parameters(const ModelConfig& config, int n,
                                              Group group);

CubicInvariants cubic_invariants(const BranchParams& bp);

// Real roots of eta^3 + x1 eta^2 + x2 eta + x3 = 0 through the trigonometric
// solution. Returns nullopt when the discriminant signals (near-)repeated
// roots; callers then fall back to direct diagonalization.
template <typename Real>
std::optional<std::array<Real, 3>> trig_cubic_roots(
    Real x1, Real x2, Real x3, std::array<Real, 3>* angles = nullptr) {
  const Real disc = x1 * x1 - Real(3) * x2;
  const Real scale = std::max({Real(1), x1 * x1, std::abs(Real(3) * x2)});
  if (!(disc > Real(1e-12) * scale)) return std::nullopt;
  Real u = (Real(9) * x1 * x2 - Real(2) * x1 * x1 * x1 - Real(27) * x3) /
           (Real(2) * std::pow(disc, Real(1.5)));
  if (std::abs(u) > Real(1)) {
    if (std::abs(u) > Real(1) + Real(1e-12)) return std::nullopt;
    u = u > Real(0) ? Real(1) : Real(-1);
  }
  const Real base = std::acos(u) / Real(3);
  const Real amp = Real(2) / Real(3) * std::sqrt(disc);
  std::array<Real, 3> roots{};
  for (int k = 0; k < 3; ++k) {
    const Real theta = base + Real(2) * Real(k) * Real(kPi) / Real(3);
    if (angles) (*angles)[k] = theta;
    Real eta = -x1 / Real(3) + amp * std::cos(theta);
    // Newton polish: the arccos argument is cancellation-prone for large
    // invariants and the raw trigonometric value can lose a few digits.
    for (int step = 0; step < 2; ++step) {
      const Real value = ((eta + x1) * eta + x2) * eta + x3;
      const Real slope = (Real(3) * eta + Real(2) * x1) * eta + x2;
      if (slope == Real(0)) break;
      eta -= value / slope;
    }
    roots[k] = eta;
  }
  return roots;
}

std::optional<EigenTriple> eigenfrequencies(double x1, double x2, double x3);
std::optional<EigenTriple> eigenfrequencies(const CubicInvariants& inv);

}  // namespace tcm
