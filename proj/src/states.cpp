#include "tcm/states.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace tcm {

namespace {

void check_field_range(double p, double order) {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("binomial field: p must lie strictly in (0,1)");
  if (!(order > 0.0))
    throw std::invalid_argument("binomial field: order must be positive");
}

// Largest n with a real, non-negative weight. Past it the generalized
// binomial coefficient changes sign and the square root stops being real.
int support_end(double order) {
  if (is_integer_order(order)) return static_cast<int>(std::lround(order));
  return static_cast<int>(std::floor(order)) + 1;
}

double log_weight(double p, double order, int n) {
  return std::lgamma(order + 1.0) - std::lgamma(n + 1.0) -
         std::lgamma(order - n + 1.0) + n * std::log(p) +
         (order - n) * std::log1p(-p);
}

}  // namespace

bool is_integer_order(double order) {
  return std::abs(order - std::round(order)) < 1e-9;
}

Eigen::VectorXd binomial_coefficients(double p, double order, int cutoff,
                                      double eps) {
  check_field_range(p, order);
  if (cutoff < 0)
    throw std::invalid_argument("binomial field: cutoff must be non-negative");
  if (!(eps > 0.0))
    throw std::invalid_argument("binomial field: eps must be positive");

  const int n_sup = support_end(order);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(cutoff + 1);
  double mass = 0.0;
  for (int n = 0; n <= std::min(cutoff, n_sup); ++n) {
    const double w = std::exp(log_weight(p, order, n));
    b[n] = std::sqrt(w);
    mass += w;
  }
  if (std::abs(mass - 1.0) > eps) {
    std::ostringstream msg;
    msg << "binomial field: retained weights deviate from unit norm by "
        << std::abs(mass - 1.0) << " > eps = " << eps;
    if (cutoff < n_sup)
      msg << "; increase the cutoff (support extends to n = " << n_sup << ")";
    else if (!is_integer_order(order))
      msg << "; a non-integer order cannot reach this tolerance, loosen eps";
    throw std::runtime_error(msg.str());
  }
  return b;
}

int choose_cutoff(double p, double order, double eps) {
  check_field_range(p, order);
  if (!(eps > 0.0 && eps <= 1e-3))
    throw std::invalid_argument("choose_cutoff: eps must lie in (0, 1e-3]");

  const int n_sup = support_end(order);
  std::vector<double> w(n_sup + 1);
  double total = 0.0;
  for (int n = 0; n <= n_sup; ++n) {
    w[n] = std::exp(log_weight(p, order, n));
    total += w[n];
  }
  double tail = total;
  int n_max = n_sup;
  for (int n = 0; n <= n_sup; ++n) {
    tail -= w[n];
    if (tail < eps) {
      n_max = n;
      break;
    }
  }
  return n_max + 4;  // headroom for the two-photon sidebands
}

BellState validate_bell(Complex gamma1, Complex gamma4) {
  const double norm = std::sqrt(std::norm(gamma1) + std::norm(gamma4));
  if (norm == 0.0)
    throw std::invalid_argument("bell state: zero amplitude vector");
  if (std::abs(norm - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg << "bell state: norm deviates from 1 by " << std::abs(norm - 1.0)
        << " (norm^2 = " << norm * norm << ")";
    throw std::invalid_argument(msg.str());
  }
  if (std::abs(norm - 1.0) <= 1e-15) return BellState{gamma1, gamma4};
  return BellState{gamma1 / norm, gamma4 / norm};
}

ModelConfig make_config(double p, double order, Complex gamma1, Complex gamma4,
                        double chi, double delta, int cutoff, double eps) {
  if (!(chi >= 0.0))
    throw std::invalid_argument("model config: chi must be non-negative");
  if (cutoff < 0) cutoff = choose_cutoff(p, order, std::min(eps, 1e-3));
  if (cutoff < 2)
    throw std::invalid_argument("model config: cutoff must be at least 2");
  if (is_integer_order(order)) {
    const int m = static_cast<int>(std::lround(order));
    if (cutoff < m + 4) {
      std::ostringstream msg;
      msg << "model config: cutoff " << cutoff << " < order + 4 = " << m + 4
          << "; the dynamics populate two photons above the field support";
      throw std::invalid_argument(msg.str());
    }
  }
  ModelConfig config;
  config.field =
      BinomialField{p, order, cutoff, binomial_coefficients(p, order, cutoff, eps)};
  config.atoms = validate_bell(gamma1, gamma4);
  config.chi = chi;
  config.delta = delta;
  return config;
}

}  // namespace tcm
