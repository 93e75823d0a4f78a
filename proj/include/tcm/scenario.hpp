#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tcm/husimi.hpp"
#include "tcm/states.hpp"

namespace tcm {

struct Sweep {
  double t_min = 0.0;
  double t_max = 25.0;
  int n_steps = 1001;
};

struct OutputSelection {
  bool squeezing = true;
  bool entropy = true;
  bool inversion = true;
  bool qgrid = false;
};

struct QGridOptions {
  double window = 12.0;  // X, Y range [-window, window]
  int resolution = 256;
  QMode mode = QMode::FourTerm;
  std::vector<double> times = {kPi / 4};
};

struct Scenario {
  std::string name = "custom";
  ModelConfig config;
  Sweep sweep;
  OutputSelection outputs;
  QGridOptions qgrid;
};

struct ScenarioError : std::runtime_error {
  explicit ScenarioError(const std::string& what) : std::runtime_error(what) {}
};

// Flat key=value configuration, '#' comments. Keys: p, m, gamma1_re,
// gamma1_im, gamma4_re, gamma4_im, chi, delta, t_min, t_max, n_steps,
// cutoff, outputs, q_window, q_resolution, q_mode, q_times. p and m are
// required; every error carries the offending line.
Scenario parse_scenario(const std::string& text);

// fig1..fig7 time sweeps, fig8a..fig8g and fig9 phase-space grids; plain
// "fig8" is an alias for fig8a.
Scenario preset_scenario(const std::string& name);

std::vector<std::string> preset_names();

}  // namespace tcm
