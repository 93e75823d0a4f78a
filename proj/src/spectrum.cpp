#include "tcm/spectrum.hpp"

#include <stdexcept>

namespace tcm {

double nonlinear_shift(double chi, int n) {
  if (chi < 0.0)
    throw std::invalid_argument("nonlinear_shift: chi must be non-negative");
  if (n < 0) throw std::invalid_argument("nonlinear_shift: n must be non-negative");
  const double nd = static_cast<double>(n);
  return chi * nd * (nd - 1.0) + 2.0 * std::sqrt(chi) * nd;
}

std::optional<BranchParams> branch_parameters(const ModelConfig& config, int n,
                                              Group group) {
  if (n < 0)
    throw std::invalid_argument("branch_parameters: n must be non-negative");
  const double chi = config.chi;
  const double delta = config.delta;
  BranchParams bp;
  bp.group = group;
  bp.n = n;
  if (group == Group::Excited) {
    bp.alpha1 = delta + nonlinear_shift(chi, n);
    bp.alpha2 = nonlinear_shift(chi, n + 1);
    bp.alpha3 = -delta + nonlinear_shift(chi, n + 2);
    bp.gamma1 = std::sqrt(n + 1.0);
    bp.gamma2 = std::sqrt(n + 2.0);
    return bp;
  }
  if (n < 2) return std::nullopt;  // 1- or 2-dimensional block
  bp.alpha1 = -delta + nonlinear_shift(chi, n);
  bp.alpha2 = nonlinear_shift(chi, n - 1);
  bp.alpha3 = delta + nonlinear_shift(chi, n - 2);
  bp.gamma1 = std::sqrt(static_cast<double>(n));
  bp.gamma2 = std::sqrt(n - 1.0);
  return bp;
}

CubicInvariants cubic_invariants(const BranchParams& bp) {
  const double g1s = bp.gamma1 * bp.gamma1;
  const double g2s = bp.gamma2 * bp.gamma2;
  CubicInvariants inv;
  inv.x1 = bp.alpha1 + bp.alpha2 + bp.alpha3;
  inv.x2 = bp.alpha2 * bp.alpha3 + bp.alpha1 * (bp.alpha2 + bp.alpha3) -
           2.0 * (g1s + g2s);
  inv.x3 = bp.alpha1 * bp.alpha2 * bp.alpha3 -
           2.0 * (bp.alpha1 * g2s + bp.alpha3 * g1s);
  return inv;
}

std::optional<EigenTriple> eigenfrequencies(double x1, double x2, double x3) {
  std::array<double, 3> theta{};
  const auto roots = trig_cubic_roots(x1, x2, x3, &theta);
  if (!roots) return std::nullopt;
  EigenTriple out;
  out.eta = *roots;
  out.theta = theta;
  out.x1 = x1;
  out.x2 = x2;
  out.x3 = x3;
  return out;
}

std::optional<EigenTriple> eigenfrequencies(const CubicInvariants& inv) {
  return eigenfrequencies(inv.x1, inv.x2, inv.x3);
}

}  // namespace tcm
