#pragma once

#include <Eigen/Dense>

#include "tcm/types.hpp"

namespace tcm {

// Single-mode field whose photon-number weights b_n^2 follow a binomial
// distribution of order M and success probability p. Non-integer orders are
// handled through the Gamma function; their support ends at floor(M)+1 and
// the normalization defect is checked against eps instead of being exact.
struct BinomialField {
  double p = 0.0;
  double order = 0.0;
  int cutoff = 0;
  Eigen::VectorXd coeffs;  // b_0 .. b_cutoff, all >= 0
};

struct BellState {
  Complex gamma1;  // amplitude of |up,up>
  Complex gamma4;  // amplitude of |down,down>
};

// Single source of truth for a run. The atom-field coupling is normalized to
// one, so chi and delta are dimensionless ratios and time is the Rabi angle.
struct ModelConfig {
  BinomialField field;
  BellState atoms;
  double chi = 0.0;
  double delta = 0.0;
};

bool is_integer_order(double order);

// b_n for n = 0..cutoff. Throws when p or the order is out of range, or when
// the retained weights miss more than eps of the unit norm (cutoff too small,
// or a non-integer order whose support defect exceeds eps).
Eigen::VectorXd binomial_coefficients(double p, double order, int cutoff,
                                      double eps = 1e-12);

// Smallest n_max whose remaining support tail is below eps, plus 4 slots of
// headroom for the two-photon sidebands populated by the dynamics.
int choose_cutoff(double p, double order, double eps);

// Renormalizes inputs whose norm is within 1e-9 of one, rejects the rest.
BellState validate_bell(Complex gamma1, Complex gamma4);

// cutoff < 0 selects choose_cutoff(p, order, eps).
ModelConfig make_config(double p, double order, Complex gamma1, Complex gamma4,
                        double chi, double delta, int cutoff = -1,
                        double eps = 1e-12);

}  // namespace tcm
