#pragma once

#include <Eigen/Dense>

#include "tcm/types.hpp"

namespace tcm {

// Collective two-atom operators J_s = kappa sum_j sigma_s^(j) with
// kappa = 1/2 for z and 1 for the ladder operators.
const Eigen::Matrix4cd& j_plus();
const Eigen::Matrix4cd& j_minus();
const Eigen::Matrix4cd& j_z();

struct CollectiveMoments {
  Complex jminus, jplus;    // <J->, <J+>
  double jz = 0.0;          // <J_z>
  Complex jplus2, jminus2;  // <J+^2>, <J-^2>
  double anticommutator = 0.0;  // <J+J- + J-J+>
};

CollectiveMoments collective_expectations(const Eigen::Matrix4cd& rho);

struct SqueezingValues {
  double f1 = 0.0;  // (dJx)^2 - |<Jz>|/2
  double f2 = 0.0;  // (dJy)^2 - |<Jz>|/2
  double f1_literal = 0.0;  // (1 - <J+ + J->^2/2 - |<Jz>|) / 2
  double f2_literal = 0.0;  // same with the other quadrature
};

// The literal forms coincide with the variance-based ones exactly when the
// transverse second moment sits at its 1/2 floor; both are reported.
SqueezingValues squeezing_parameters(const Eigen::Matrix4cd& rho);

double inversion(const Eigen::Matrix4cd& rho);  // rho11 - rho44

struct SqueezingSample {
  double t = 0.0;
  double f1 = 0.0, f2 = 0.0;
  double f1_literal = 0.0, f2_literal = 0.0;
  double jz = 0.0;
  Complex jminus;
  double inversion = 0.0;
};

SqueezingSample squeezing_sample(double t, const Eigen::Matrix4cd& rho);

}  // namespace tcm
