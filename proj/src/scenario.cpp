#include "tcm/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace tcm {

namespace {

const std::vector<std::string> kKnownKeys = {
    "p",      "m",        "gamma1_re", "gamma1_im", "gamma4_re", "gamma4_im",
    "chi",    "delta",    "t_min",     "t_max",     "n_steps",   "cutoff",
    "outputs", "q_window", "q_resolution", "q_mode", "q_times"};

[[noreturn]] void fail(int line, const std::string& what) {
  std::ostringstream msg;
  msg << "scenario line " << line << ": " << what;
  throw ScenarioError(msg.str());
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& value, int line) {
  try {
    size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) fail(line, "trailing characters in '" + value + "'");
    return v;
  } catch (const ScenarioError&) {
    throw;
  } catch (const std::exception&) {
    fail(line, "expected a number, got '" + value + "'");
  }
}

int parse_int(const std::string& value, int line) {
  const double v = parse_double(value, line);
  const int i = static_cast<int>(std::lround(v));
  if (std::abs(v - i) > 1e-9) fail(line, "expected an integer, got '" + value + "'");
  return i;
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::istringstream stream(value);
  std::string item;
  while (std::getline(stream, item, ',')) {
    item = trim(item);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  std::map<std::string, std::pair<std::string, int>> entries;
  std::istringstream stream(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    const auto comment = raw.find('#');
    if (comment != std::string::npos) raw.erase(comment);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end())
      fail(line_no, "unknown key '" + key + "'");
    if (value.empty()) fail(line_no, "empty value for '" + key + "'");
    const auto [it, inserted] = entries.insert({key, {value, line_no}});
    if (!inserted)
      fail(line_no, "duplicate key '" + key + "' (first on line " +
                        std::to_string(it->second.second) + ")");
  }

  const auto has = [&](const char* key) { return entries.count(key) > 0; };
  const auto value_of = [&](const char* key) { return entries.at(key).first; };
  const auto line_of = [&](const char* key) { return entries.at(key).second; };

  if (!has("p")) throw ScenarioError("scenario: missing required key 'p'");
  if (!has("m")) throw ScenarioError("scenario: missing required key 'm'");

  const double p = parse_double(value_of("p"), line_of("p"));
  if (!(p > 0.0 && p < 1.0)) fail(line_of("p"), "p must lie strictly in (0,1)");
  const double order = parse_double(value_of("m"), line_of("m"));
  if (!(order > 0.0)) fail(line_of("m"), "m must be positive");

  const double g1_re = has("gamma1_re")
                           ? parse_double(value_of("gamma1_re"), line_of("gamma1_re"))
                           : 1.0 / std::sqrt(2.0);
  const double g1_im =
      has("gamma1_im") ? parse_double(value_of("gamma1_im"), line_of("gamma1_im"))
                       : 0.0;
  const double g4_re =
      has("gamma4_re") ? parse_double(value_of("gamma4_re"), line_of("gamma4_re"))
                       : 0.0;
  const double g4_im = has("gamma4_im")
                           ? parse_double(value_of("gamma4_im"), line_of("gamma4_im"))
                           : 1.0 / std::sqrt(2.0);

  const double chi = has("chi") ? parse_double(value_of("chi"), line_of("chi")) : 0.0;
  if (chi < 0.0) fail(line_of("chi"), "chi must be non-negative");
  const double delta =
      has("delta") ? parse_double(value_of("delta"), line_of("delta")) : 0.0;
  const int cutoff =
      has("cutoff") ? parse_int(value_of("cutoff"), line_of("cutoff")) : -1;
  if (has("cutoff") && cutoff < 2) fail(line_of("cutoff"), "cutoff must be >= 2");

  Scenario scenario;
  try {
    scenario.config = make_config(p, order, Complex(g1_re, g1_im),
                                  Complex(g4_re, g4_im), chi, delta, cutoff);
  } catch (const std::exception& e) {
    throw ScenarioError(std::string("scenario: ") + e.what());
  }

  scenario.sweep.t_min =
      has("t_min") ? parse_double(value_of("t_min"), line_of("t_min")) : 0.0;
  scenario.sweep.t_max =
      has("t_max") ? parse_double(value_of("t_max"), line_of("t_max")) : 25.0;
  if (!(scenario.sweep.t_min < scenario.sweep.t_max)) {
    const int line = has("t_max")   ? line_of("t_max")
                     : has("t_min") ? line_of("t_min")
                                    : line_of("p");
    fail(line, "t_min must be < t_max");
  }
  scenario.sweep.n_steps =
      has("n_steps") ? parse_int(value_of("n_steps"), line_of("n_steps")) : 1001;
  if (scenario.sweep.n_steps < 2)
    fail(line_of("n_steps"), "n_steps must be at least 2");

  if (has("outputs")) {
    OutputSelection sel{false, false, false, false};
    for (const auto& item : split_list(value_of("outputs"))) {
      if (item == "squeezing")
        sel.squeezing = true;
      else if (item == "entropy")
        sel.entropy = true;
      else if (item == "inversion")
        sel.inversion = true;
      else if (item == "qgrid")
        sel.qgrid = true;
      else
        fail(line_of("outputs"), "unknown output '" + item + "'");
    }
    scenario.outputs = sel;
  }

  if (has("q_window")) {
    scenario.qgrid.window = parse_double(value_of("q_window"), line_of("q_window"));
    if (!(scenario.qgrid.window > 0.0))
      fail(line_of("q_window"), "q_window must be positive");
  }
  if (has("q_resolution")) {
    scenario.qgrid.resolution =
        parse_int(value_of("q_resolution"), line_of("q_resolution"));
    if (scenario.qgrid.resolution < 16)
      fail(line_of("q_resolution"), "q_resolution must be at least 16");
  }
  if (has("q_mode")) {
    const std::string mode = value_of("q_mode");
    if (mode == "four_term")
      scenario.qgrid.mode = QMode::FourTerm;
    else if (mode == "two_term")
      scenario.qgrid.mode = QMode::TwoTerm;
    else
      fail(line_of("q_mode"), "q_mode must be 'four_term' or 'two_term'");
  }
  if (has("q_times")) {
    scenario.qgrid.times.clear();
    for (const auto& item : split_list(value_of("q_times"))) {
      const double t = parse_double(item, line_of("q_times"));
      if (t < 0.0) fail(line_of("q_times"), "q_times must be non-negative");
      scenario.qgrid.times.push_back(t);
    }
    if (scenario.qgrid.times.empty())
      fail(line_of("q_times"), "q_times must name at least one time");
  }
  return scenario;
}

namespace {

Scenario sweep_preset(const std::string& name, double p, double order,
                      double chi, double delta) {
  Scenario s;
  s.name = name;
  s.config = make_config(p, order, Complex(1.0 / std::sqrt(2.0), 0.0),
                         Complex(0.0, 1.0 / std::sqrt(2.0)), chi, delta);
  s.sweep = Sweep{0.0, 25.0, 1001};
  s.outputs = OutputSelection{true, true, true, false};
  return s;
}

Scenario grid_preset(const std::string& name, double chi,
                     std::vector<double> times) {
  Scenario s = sweep_preset(name, 0.9, 50.0, chi, 0.0);
  s.outputs = OutputSelection{false, false, false, true};
  s.qgrid = QGridOptions{12.0, 256, QMode::FourTerm, std::move(times)};
  return s;
}

}  // namespace

Scenario preset_scenario(const std::string& name) {
  if (name == "fig1") return sweep_preset(name, 0.9, 50.0, 0.0, 0.0);
  if (name == "fig2") return sweep_preset(name, 0.9, 50.0, 0.0, 10.0);
  if (name == "fig3") return sweep_preset(name, 0.9, 50.0, 0.5, 0.0);
  if (name == "fig4") return sweep_preset(name, 0.9, 50.0, 5.0, 0.0);
  if (name == "fig5") return sweep_preset(name, 0.9, 50.0, 0.5, 5.0);
  if (name == "fig6") return sweep_preset(name, 0.98, 100.0, 0.0, 0.0);
  if (name == "fig7") return sweep_preset(name, 0.98, 100.0, 0.5, 0.0);
  if (name == "fig8" || name == "fig8a") return grid_preset("fig8a", 0.0, {kPi / 4});
  if (name == "fig8b") return grid_preset(name, 0.5, {kPi / 4});
  if (name == "fig8c") return grid_preset(name, 1.0, {kPi / 4});
  if (name == "fig8d") return grid_preset(name, 1.5, {kPi / 4});
  if (name == "fig8e") return grid_preset(name, 2.0, {kPi / 4});
  if (name == "fig8f") return grid_preset(name, 2.5, {kPi / 4});
  if (name == "fig8g") return grid_preset(name, 5.0, {kPi / 4});
  if (name == "fig9")
    return grid_preset(name, 5.0,
                       {0.0, kPi / 6, kPi / 4, kPi / 3, kPi / 2, kPi});
  throw ScenarioError("unknown preset '" + name + "'");
}

std::vector<std::string> preset_names() {
  return {"fig1",  "fig2",  "fig3",  "fig4",  "fig5",  "fig6",  "fig7", "fig8a",
          "fig8b", "fig8c", "fig8d", "fig8e", "fig8f", "fig8g", "fig9"};
}

}  // namespace tcm
