#include "tcm/entropy.hpp"

#include <sstream>
#include <stdexcept>

namespace tcm {

namespace {

double abs2(Complex z) { return std::norm(z); }

void check_hermitian(const Eigen::Ref<const Eigen::MatrixXcd>& rho,
                     const char* where) {
  const double dev = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (dev > 1e-9) {
    std::ostringstream msg;
    msg << where << ": non-Hermitian input, deviation " << dev;
    throw std::invalid_argument(msg.str());
  }
}

Eigen::VectorXd clamped_spectrum(const Eigen::VectorXd& raw, const char* where) {
  // Clamping is a rounding correction only; a genuine violation is an error.
  if (raw.minCoeff() < -1e-9 || raw.maxCoeff() > 1.0 + 1e-9) {
    std::ostringstream msg;
    msg << where << ": spectrum outside [0,1] beyond tolerance: ["
        << raw.minCoeff() << ", " << raw.maxCoeff() << "]";
    throw std::invalid_argument(msg.str());
  }
  return raw.cwiseMax(0.0).cwiseMin(1.0);
}

}  // namespace

QuarticCoefficients quartic_coefficients(const Eigen::Matrix4cd& rho) {
  const double r11 = rho(0, 0).real();
  const double r22 = rho(1, 1).real();
  const double r44 = rho(3, 3).real();
  const Complex r12 = rho(0, 1);
  const Complex r14 = rho(0, 3);
  const Complex r23 = rho(1, 2);
  const Complex r24 = rho(1, 3);
  // Cross terms between the duplicated middle rows enter det(x I - rho)
  // with multiplicity two.
  const double triple = (std::conj(r14) * r12 * r24).real();

  QuarticCoefficients c;
  c.c3 = -(r11 + 2.0 * r22 + r44);
  c.c2 = -abs2(r14) - 2.0 * abs2(r24) - 2.0 * abs2(r12) - abs2(r23) +
         2.0 * r22 * (r11 + r44) + r22 * r22 + r11 * r44;
  c.c1 = 2.0 * abs2(r14) * r22 + 2.0 * abs2(r24) * (r11 + r22) +
         2.0 * abs2(r12) * (r22 + r44) - r22 * r22 * (r11 + r44) -
         2.0 * r11 * r22 * r44 - 2.0 * r23.real() * (abs2(r24) + abs2(r12)) -
         4.0 * triple + abs2(r23) * (r11 + r44);
  c.c0 = abs2(r14) * abs2(r23) - r22 * r22 * abs2(r14) -
         2.0 * r11 * r22 * abs2(r24) - 2.0 * r44 * r22 * abs2(r12) -
         r11 * r44 * abs2(r23) + r11 * r22 * r22 * r44 +
         2.0 * (r11 * abs2(r24) + r44 * abs2(r12)) * r23.real() +
         4.0 * (r22 - r23.real()) * triple;
  return c;
}

Eigen::Vector4d eigenvalues_numeric(const Eigen::Matrix4cd& rho) {
  check_hermitian(rho, "eigenvalues_numeric");
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(
      (rho + rho.adjoint()) * 0.5);
  const Eigen::Vector4d clamped =
      clamped_spectrum(solver.eigenvalues(), "eigenvalues_numeric");
  return clamped.reverse();
}

std::optional<Eigen::Vector4d> eigenvalues_closed_form(
    const QuarticCoefficients& c) {
  const auto roots = closed_form_quartic_roots(c.c0, c.c1, c.c2, c.c3);
  if (!roots) return std::nullopt;
  Eigen::Vector4d out;
  for (int i = 0; i < 4; ++i) out(i) = (*roots)[i];
  return out;
}

double von_neumann_entropy(const Eigen::Ref<const Eigen::VectorXd>& spectrum) {
  double s = 0.0;
  for (int i = 0; i < spectrum.size(); ++i) {
    const double x = spectrum(i);
    if (x > 0.0) s -= x * std::log(x);
  }
  return s;
}

double atomic_entropy(const Eigen::Matrix4cd& rho) {
  return von_neumann_entropy(eigenvalues_numeric(rho));
}

double field_entropy(const Eigen::MatrixXcd& rho) {
  check_hermitian(rho, "field_entropy");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      (rho + rho.adjoint()) * 0.5);
  const Eigen::VectorXd spectrum =
      clamped_spectrum(solver.eigenvalues(), "field_entropy");
  return von_neumann_entropy(spectrum);
}

}  // namespace tcm
