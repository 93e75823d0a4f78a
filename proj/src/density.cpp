#include "tcm/density.hpp"

namespace tcm {

Eigen::Matrix4cd atomic_density(const AmplitudeTable& tab) {
  const Eigen::VectorXcd* comps[4] = {&tab.U, &tab.R, &tab.R, &tab.T};
  Eigen::Matrix4cd rho;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      rho(a, b) = comps[b]->dot(*comps[a]);  // sum_m comps[a][m] conj(comps[b][m])
  return rho;
}

Eigen::Matrix4cd atomic_density_summation(const AmplitudeTable& tab) {
  const int size = static_cast<int>(tab.A.size());
  const auto b = [&](int i) -> double {
    return (i >= 0 && i <= tab.cutoff) ? tab.b[i] : 0.0;
  };
  const auto at = [size](const Eigen::VectorXcd& v, int i) -> Complex {
    return (i >= 0 && i < size) ? v[i] : Complex(0.0, 0.0);
  };
  const Eigen::VectorXcd& A = tab.A;
  const Eigen::VectorXcd& B = tab.B;
  const Eigen::VectorXcd& C = tab.C();
  const Eigen::VectorXcd& D = tab.D;
  const Eigen::VectorXcd& E = tab.E;
  const Eigen::VectorXcd& F = tab.F();
  const Eigen::VectorXcd& G = tab.G;
  const Eigen::VectorXcd& H = tab.H;

  Complex r11 = 0, r22 = 0, r44 = 0, r12 = 0, r14 = 0, r23 = 0, r24 = 0;
  for (int n = 0; n < size; ++n) {
    const double b2 = b(n) * b(n);
    r11 += b2 * (std::norm(at(A, n)) + std::norm(at(H, n - 2))) +
           b(n) * b(n + 2) * at(A, n) * std::conj(at(H, n)) +
           b(n) * b(n - 2) * std::conj(at(A, n - 2)) * at(H, n - 2);
    r22 += b2 * (std::norm(at(B, n + 1)) + std::norm(at(G, n - 1))) +
           b(n) * b(n + 2) * at(B, n + 1) * std::conj(at(G, n + 1)) +
           b(n) * b(n - 2) * std::conj(at(B, n - 1)) * at(G, n - 1);
    r44 += b2 * (std::norm(at(D, n + 2)) + std::norm(at(E, n))) +
           b(n) * b(n + 2) * at(D, n + 2) * std::conj(at(E, n + 2)) +
           b(n) * b(n - 2) * std::conj(at(D, n)) * at(E, n);
    r12 += b(n) * b(n - 1) * at(A, n) * std::conj(at(B, n)) +
           b(n) * b(n - 3) * std::conj(at(B, n - 2)) * at(H, n - 2) +
           b(n) * b(n + 1) * at(A, n) * std::conj(at(G, n)) +
           b(n) * b(n - 1) * std::conj(at(G, n - 2)) * at(H, n - 2);
    r14 += b(n) * b(n - 2) * at(A, n) * std::conj(at(D, n)) +
           b(n) * b(n - 4) * std::conj(at(D, n - 2)) * at(H, n - 2) +
           b2 * at(A, n) * std::conj(at(E, n)) +
           b(n) * b(n - 2) * std::conj(at(E, n - 2)) * at(H, n - 2);
    r23 += b2 * std::norm(at(B, n + 1)) +
           b(n) * b(n - 2) * std::conj(at(C, n - 1)) * at(G, n - 1) +
           b(n) * b(n + 2) * at(B, n + 1) * std::conj(at(F, n + 1)) +
           b2 * std::norm(at(F, n - 1));
    r24 += b(n) * b(n - 1) * at(B, n + 1) * std::conj(at(D, n + 1)) +
           b(n) * b(n - 3) * std::conj(at(D, n - 1)) * at(G, n - 1) +
           b(n) * b(n + 1) * at(B, n + 1) * std::conj(at(E, n + 1)) +
           b(n) * b(n - 1) * std::conj(at(E, n - 1)) * at(G, n - 1);
  }
  Eigen::Matrix4cd rho;
  rho << r11, r12, r12, r14,
         std::conj(r12), r22, r23, r24,
         std::conj(r12), std::conj(r23), r22, r24,
         std::conj(r14), std::conj(r24), std::conj(r24), r44;
  return rho;
}

Eigen::MatrixXcd field_density(const AmplitudeTable& tab) {
  return tab.U * tab.U.adjoint() + 2.0 * (tab.R * tab.R.adjoint()) +
         tab.T * tab.T.adjoint();
}

}  // namespace tcm
