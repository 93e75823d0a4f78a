#pragma once

#include <complex>

namespace tcm {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

}  // namespace tcm
