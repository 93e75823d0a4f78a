#include "tcm/observables.hpp"

namespace tcm {

namespace {

Eigen::Matrix4cd make_j_plus() {
  Eigen::Matrix4cd j = Eigen::Matrix4cd::Zero();
  j(0, 1) = j(0, 2) = 1.0;  // |up,down>, |down,up> -> |up,up>
  j(1, 3) = j(2, 3) = 1.0;  // |down,down> -> one flipped
  return j;
}

Eigen::Matrix4cd make_j_z() {
  Eigen::Matrix4cd j = Eigen::Matrix4cd::Zero();
  j(0, 0) = 1.0;
  j(3, 3) = -1.0;
  return j;
}

}  // namespace

const Eigen::Matrix4cd& j_plus() {
  static const Eigen::Matrix4cd j = make_j_plus();
  return j;
}

const Eigen::Matrix4cd& j_minus() {
  static const Eigen::Matrix4cd j = make_j_plus().adjoint();
  return j;
}

const Eigen::Matrix4cd& j_z() {
  static const Eigen::Matrix4cd j = make_j_z();
  return j;
}

CollectiveMoments collective_expectations(const Eigen::Matrix4cd& rho) {
  const auto expect = [&rho](const Eigen::Matrix4cd& op) -> Complex {
    return (rho * op).trace();
  };
  const Eigen::Matrix4cd& jp = j_plus();
  const Eigen::Matrix4cd& jm = j_minus();
  CollectiveMoments m;
  m.jminus = expect(jm);
  m.jplus = std::conj(m.jminus);  // exact for Hermitian input
  m.jz = expect(j_z()).real();
  m.jplus2 = expect(jp * jp);
  m.jminus2 = expect(jm * jm);
  m.anticommutator = expect(jp * jm + jm * jp).real();
  return m;
}

SqueezingValues squeezing_parameters(const Eigen::Matrix4cd& rho) {
  const CollectiveMoments m = collective_expectations(rho);
  const double jx = 0.5 * (m.jplus + m.jminus).real();
  const double jy = (Complex(0.0, -0.5) * (m.jplus - m.jminus)).real();
  const double jx2 = 0.25 * (m.jplus2 + m.jminus2).real() + 0.25 * m.anticommutator;
  const double jy2 = -0.25 * (m.jplus2 + m.jminus2).real() + 0.25 * m.anticommutator;
  const double floor = 0.5 * std::abs(m.jz);

  SqueezingValues v;
  v.f1 = jx2 - jx * jx - floor;
  v.f2 = jy2 - jy * jy - floor;
  const double sx = (m.jplus + m.jminus).real();
  const double sy = (Complex(0.0, -1.0) * (m.jplus - m.jminus)).real();
  v.f1_literal = 0.5 * (1.0 - 0.5 * sx * sx - std::abs(m.jz));
  v.f2_literal = 0.5 * (1.0 - 0.5 * sy * sy - std::abs(m.jz));
  return v;
}

double inversion(const Eigen::Matrix4cd& rho) {
  return (rho(0, 0) - rho(3, 3)).real();
}

SqueezingSample squeezing_sample(double t, const Eigen::Matrix4cd& rho) {
  const SqueezingValues v = squeezing_parameters(rho);
  const CollectiveMoments m = collective_expectations(rho);
  SqueezingSample sample;
  sample.t = t;
  sample.f1 = v.f1;
  sample.f2 = v.f2;
  sample.f1_literal = v.f1_literal;
  sample.f2_literal = v.f2_literal;
  sample.jz = m.jz;
  sample.jminus = m.jminus;
  sample.inversion = inversion(rho);
  return sample;
}

}  // namespace tcm
