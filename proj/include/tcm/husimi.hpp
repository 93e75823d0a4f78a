#pragma once

#include <Eigen/Dense>

#include "tcm/amplitudes.hpp"

namespace tcm {

// TwoTerm restricts Q to the |U> and |T> sector overlaps; FourTerm includes
// all four atomic sectors, so it is the trace-complete form that integrates
// to one whenever the single-excitation sector is populated.
enum class QMode { TwoTerm, FourTerm };

struct QGrid {
  double x0 = 0.0, x1 = 0.0, y0 = 0.0, y1 = 0.0;
  int nx = 0, ny = 0;
  QMode mode = QMode::FourTerm;
  double t = 0.0;
  Eigen::MatrixXd values;  // values(iy, ix), X fastest
};

// Coherent-state row <alpha|m> for m = 0..size-1. Magnitudes are formed in
// log space (-|a|^2/2 + m ln|a| - ln(m!)/2) so large |alpha| underflows
// gracefully instead of poisoning the sum with overflowed factorials.
Eigen::VectorXcd coherent_overlap_row(Complex alpha, int size);
Eigen::VectorXcd coherent_overlap_row(Complex alpha,
                                      const Eigen::VectorXd& half_lgamma);

// Q(alpha) = (|<a|U>|^2 + |<a|T>|^2 [+ 2|<a|R>|^2]) / pi.
double q_value(Complex alpha, const AmplitudeTable& tab, QMode mode);

QGrid q_grid(const AmplitudeTable& tab, double x0, double x1, double y0,
             double y1, int nx, int ny, QMode mode);

// Riemann sum of the grid against dX dY.
double grid_integral(const QGrid& grid);

// Connected components (4-neighbor) of {Q >= rel_threshold * max Q}.
int blob_count(const QGrid& grid, double rel_threshold);

struct GridPeak {
  double x = 0.0, y = 0.0, q = 0.0;
};

GridPeak grid_peak(const QGrid& grid);

}  // namespace tcm
