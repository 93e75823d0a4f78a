#include "tcm/runner.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "tcm/density.hpp"
#include "tcm/entropy.hpp"
#include "tcm/observables.hpp"

namespace tcm {

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12e", v);
  return buf;
}

const char* mode_name(QMode mode) {
  return mode == QMode::FourTerm ? "four_term" : "two_term";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
}

}  // namespace

std::vector<SweepRow> run_sweep(const Scenario& scenario) {
  const SpectralCache cache(scenario.config);
  const Sweep& sweep = scenario.sweep;
  const double dt =
      (sweep.t_max - sweep.t_min) / static_cast<double>(sweep.n_steps - 1);
  std::vector<SweepRow> rows(sweep.n_steps);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < sweep.n_steps; ++i) {
    const double t = sweep.t_min + i * dt;
    const AmplitudeTable tab = cache.state_vector(t);
    const Eigen::Matrix4cd rho = atomic_density(tab);
    const SqueezingSample sample = squeezing_sample(t, rho);
    rows[i] = SweepRow{t,
                       sample.f1,
                       sample.f2,
                       sample.f1_literal,
                       sample.f2_literal,
                       atomic_entropy(rho),
                       sample.inversion};
  }
  return rows;
}

std::string timeseries_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "lambda_t,F1,F2,F1_literal,F2_literal,S_A,inversion\n";
  for (const SweepRow& r : rows)
    out << sci(r.t) << ',' << sci(r.f1) << ',' << sci(r.f2) << ','
        << sci(r.f1_literal) << ',' << sci(r.f2_literal) << ',' << sci(r.entropy)
        << ',' << sci(r.inversion) << '\n';
  return out.str();
}

std::vector<QGridResult> run_qgrid(const Scenario& scenario) {
  const SpectralCache cache(scenario.config);
  const double w = scenario.qgrid.window;
  std::vector<QGridResult> results;
  results.reserve(scenario.qgrid.times.size());
  for (const double t : scenario.qgrid.times) {
    QGridResult r;
    r.grid = q_grid(cache.state_vector(t), -w, w, -w, w,
                    scenario.qgrid.resolution, scenario.qgrid.resolution,
                    scenario.qgrid.mode);
    r.blobs = blob_count(r.grid, 0.2);
    r.peak = grid_peak(r.grid);
    r.integral = grid_integral(r.grid);
    results.push_back(std::move(r));
  }
  return results;
}

std::string qgrid_csv(const QGrid& grid) {
  std::ostringstream out;
  out << "X,Y,Q\n";
  const double dx = (grid.x1 - grid.x0) / (grid.nx - 1);
  const double dy = (grid.y1 - grid.y0) / (grid.ny - 1);
  for (int iy = 0; iy < grid.ny; ++iy) {
    const double y = grid.y0 + iy * dy;
    for (int ix = 0; ix < grid.nx; ++ix)
      out << sci(grid.x0 + ix * dx) << ',' << sci(y) << ','
          << sci(grid.values(iy, ix)) << '\n';
  }
  return out.str();
}

std::string qgrid_meta(const QGridResult& result) {
  const QGrid& g = result.grid;
  std::ostringstream out;
  out << "time=" << sci(g.t) << '\n'
      << "x_range=" << sci(g.x0) << ',' << sci(g.x1) << '\n'
      << "y_range=" << sci(g.y0) << ',' << sci(g.y1) << '\n'
      << "resolution=" << g.nx << 'x' << g.ny << '\n'
      << "mode=" << mode_name(g.mode) << '\n'
      << "blob_count=" << result.blobs << '\n'
      << "peak_x=" << sci(result.peak.x) << '\n'
      << "peak_y=" << sci(result.peak.y) << '\n'
      << "peak_q=" << sci(result.peak.q) << '\n'
      << "integral=" << sci(result.integral) << '\n';
  return out.str();
}

std::vector<std::string> run_scenario_to_files(const Scenario& scenario,
                                               const std::string& out_dir,
                                               std::ostream& log) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  std::vector<std::string> written;

  const OutputSelection& sel = scenario.outputs;
  if (sel.squeezing || sel.entropy || sel.inversion) {
    const std::string path = (fs::path(out_dir) / "timeseries.csv").string();
    write_file(path, timeseries_csv(run_sweep(scenario)));
    written.push_back(path);
  }
  if (sel.qgrid) {
    const auto results = run_qgrid(scenario);
    for (size_t i = 0; i < results.size(); ++i) {
      char stem[32];
      std::snprintf(stem, sizeof(stem), "qgrid_%03zu", i);
      const std::string csv_path =
          (fs::path(out_dir) / (std::string(stem) + ".csv")).string();
      const std::string meta_path =
          (fs::path(out_dir) / (std::string(stem) + ".meta")).string();
      write_file(csv_path, qgrid_csv(results[i].grid));
      write_file(meta_path, qgrid_meta(results[i]));
      written.push_back(csv_path);
      written.push_back(meta_path);
      log << stem << ": t=" << results[i].grid.t
          << " blob_count=" << results[i].blobs << " peak=("
          << results[i].peak.x << ", " << results[i].peak.y
          << ") q_max=" << results[i].peak.q
          << " integral=" << results[i].integral << '\n';
    }
  }
  return written;
}

}  // namespace tcm
