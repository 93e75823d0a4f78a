#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tcm/scenario.hpp"

namespace tcm {

struct SweepRow {
  double t = 0.0;
  double f1 = 0.0, f2 = 0.0;
  double f1_literal = 0.0, f2_literal = 0.0;
  double entropy = 0.0;
  double inversion = 0.0;
};

std::vector<SweepRow> run_sweep(const Scenario& scenario);

// CSV with header lambda_t,F1,F2,F1_literal,F2_literal,S_A,inversion and
// %.12e values; byte-identical across reruns of the same scenario.
std::string timeseries_csv(const std::vector<SweepRow>& rows);

struct QGridResult {
  QGrid grid;
  int blobs = 0;
  GridPeak peak;
  double integral = 0.0;
};

std::vector<QGridResult> run_qgrid(const Scenario& scenario);

std::string qgrid_csv(const QGrid& grid);
std::string qgrid_meta(const QGridResult& result);

// Writes timeseries.csv and/or qgrid_###.{csv,meta} under out_dir and
// returns the paths written, one summary line per grid on the given stream.
std::vector<std::string> run_scenario_to_files(const Scenario& scenario,
                                               const std::string& out_dir,
                                               std::ostream& log);

}  // namespace tcm
