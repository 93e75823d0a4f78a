#pragma once

#include <Eigen/Dense>

#include "tcm/amplitudes.hpp"

namespace tcm {

// Reduced two-atom density matrix in the basis
// |1>=|up,up>, |2>=|up,down>, |3>=|down,up>, |4>=|down,down>,
// built from direct Fock-basis inner products of the component vectors.
Eigen::Matrix4cd atomic_density(const AmplitudeTable& tab);

// Same matrix assembled from the index-shifted summation formulas over the
// raw amplitude arrays. Kept as an independent route for regression tests;
// the shifts are easy to get wrong, so the two constructions are compared.
Eigen::Matrix4cd atomic_density_summation(const AmplitudeTable& tab);

// Reduced field density matrix |U><U| + |R><R| + |S><S| + |T><T| in the Fock
// basis, dimension (cutoff+3)^2.
Eigen::MatrixXcd field_density(const AmplitudeTable& tab);

}  // namespace tcm
