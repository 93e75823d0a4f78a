#include "tcm/husimi.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace tcm {

namespace {

Eigen::VectorXd half_lgamma_table(int size) {
  Eigen::VectorXd table(size);
  for (int m = 0; m < size; ++m) table(m) = 0.5 * std::lgamma(m + 1.0);
  return table;
}

Complex overlap(const Eigen::VectorXcd& row, const Eigen::VectorXcd& v) {
  return row.cwiseProduct(v).sum();  // <alpha|v>, row already holds <alpha|m>
}

}  // namespace

Eigen::VectorXcd coherent_overlap_row(Complex alpha,
                                      const Eigen::VectorXd& half_lgamma) {
  const int size = static_cast<int>(half_lgamma.size());
  Eigen::VectorXcd row = Eigen::VectorXcd::Zero(size);
  const double r = std::abs(alpha);
  if (r == 0.0) {
    row(0) = 1.0;
    return row;
  }
  const double log_r = std::log(r);
  const double theta = std::arg(alpha);
  for (int m = 0; m < size; ++m) {
    const double log_mag = -0.5 * r * r + m * log_r - half_lgamma(m);
    row(m) = std::polar(std::exp(log_mag), -m * theta);
  }
  return row;
}

Eigen::VectorXcd coherent_overlap_row(Complex alpha, int size) {
  return coherent_overlap_row(alpha, half_lgamma_table(size));
}

double q_value(Complex alpha, const AmplitudeTable& tab, QMode mode) {
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()))
    throw std::invalid_argument("q_value: alpha must be finite");
  const Eigen::VectorXcd row =
      coherent_overlap_row(alpha, static_cast<int>(tab.U.size()));
  double q = std::norm(overlap(row, tab.U)) + std::norm(overlap(row, tab.T));
  if (mode == QMode::FourTerm) q += 2.0 * std::norm(overlap(row, tab.R));
  return q / kPi;
}

QGrid q_grid(const AmplitudeTable& tab, double x0, double x1, double y0,
             double y1, int nx, int ny, QMode mode) {
  if (nx < 16 || ny < 16)
    throw std::invalid_argument("q_grid: resolution must be at least 16");
  if (!(x0 < x1) || !(y0 < y1))
    throw std::invalid_argument("q_grid: empty window");
  QGrid grid;
  grid.x0 = x0;
  grid.x1 = x1;
  grid.y0 = y0;
  grid.y1 = y1;
  grid.nx = nx;
  grid.ny = ny;
  grid.mode = mode;
  grid.t = tab.t;
  grid.values.resize(ny, nx);
  const Eigen::VectorXd half_lg =
      half_lgamma_table(static_cast<int>(tab.U.size()));
  const double dx = (x1 - x0) / (nx - 1);
  const double dy = (y1 - y0) / (ny - 1);
#pragma omp parallel for schedule(static)
  for (int iy = 0; iy < ny; ++iy) {
    const double y = y0 + iy * dy;
    for (int ix = 0; ix < nx; ++ix) {
      const Complex alpha(x0 + ix * dx, y);
      const Eigen::VectorXcd row = coherent_overlap_row(alpha, half_lg);
      double q =
          std::norm(overlap(row, tab.U)) + std::norm(overlap(row, tab.T));
      if (mode == QMode::FourTerm) q += 2.0 * std::norm(overlap(row, tab.R));
      grid.values(iy, ix) = q / kPi;
    }
  }
  return grid;
}

double grid_integral(const QGrid& grid) {
  const double dx = (grid.x1 - grid.x0) / (grid.nx - 1);
  const double dy = (grid.y1 - grid.y0) / (grid.ny - 1);
  return grid.values.sum() * dx * dy;
}

int blob_count(const QGrid& grid, double rel_threshold) {
  if (grid.values.size() == 0)
    throw std::invalid_argument("blob_count: empty grid");
  if (!(rel_threshold > 0.0 && rel_threshold < 1.0))
    throw std::invalid_argument("blob_count: threshold must lie in (0,1)");
  const double peak = grid.values.maxCoeff();
  if (peak <= 0.0) return 0;
  const double cut = rel_threshold * peak;
  const int ny = grid.ny, nx = grid.nx;
  std::vector<char> seen(static_cast<size_t>(ny) * nx, 0);
  const auto idx = [nx](int iy, int ix) { return iy * nx + ix; };
  int components = 0;
  std::vector<int> stack;
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      if (seen[idx(iy, ix)] || grid.values(iy, ix) < cut) continue;
      ++components;
      stack.assign(1, idx(iy, ix));
      seen[idx(iy, ix)] = 1;
      while (!stack.empty()) {
        const int cur = stack.back();
        stack.pop_back();
        const int cy = cur / nx, cx = cur % nx;
        constexpr int steps[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        for (const auto& s : steps) {
          const int ny2 = cy + s[0], nx2 = cx + s[1];
          if (ny2 < 0 || ny2 >= ny || nx2 < 0 || nx2 >= nx) continue;
          if (seen[idx(ny2, nx2)] || grid.values(ny2, nx2) < cut) continue;
          seen[idx(ny2, nx2)] = 1;
          stack.push_back(idx(ny2, nx2));
        }
      }
    }
  }
  return components;
}

GridPeak grid_peak(const QGrid& grid) {
  Eigen::Index iy = 0, ix = 0;
  const double q = grid.values.maxCoeff(&iy, &ix);
  GridPeak peak;
  peak.x = grid.x0 + ix * (grid.x1 - grid.x0) / (grid.nx - 1);
  peak.y = grid.y0 + iy * (grid.y1 - grid.y0) / (grid.ny - 1);
  peak.q = q;
  return peak;
}

}  // namespace tcm
