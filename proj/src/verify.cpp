#include "tcm/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <ostream>
#include <random>
#include <stdexcept>

#include "tcm/density.hpp"
#include "tcm/entropy.hpp"
#include "tcm/husimi.hpp"
#include "tcm/observables.hpp"
#include "tcm/oracle.hpp"
#include "tcm/runner.hpp"
#include "tcm/scenario.hpp"

namespace tcm {

namespace {

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return buf;
}

ModelConfig small_config(double chi, double delta) {
  return make_config(0.5, 5.0, Complex(1.0 / std::sqrt(2.0), 0.0),
                     Complex(0.0, 1.0 / std::sqrt(2.0)), chi, delta);
}

std::vector<std::string> sweep_preset_names() {
  return {"fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7"};
}

// Random density matrix with the atom-exchange symmetry, full rank a.s.
Eigen::Matrix4cd random_symmetric_rho(std::mt19937& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::Matrix4cd x;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) x(i, j) = Complex(normal(rng), normal(rng));
  Eigen::Matrix4cd rho = x * x.adjoint();
  Eigen::PermutationMatrix<4> swap;
  swap.setIdentity();
  swap.applyTranspositionOnTheRight(1, 2);
  rho = 0.5 * (rho + swap * rho * swap);
  return rho / rho.trace().real();
}

CriterionResult criterion_oracle_small() {
  CriterionResult result{1, "oracle equivalence (M=5 sweeps)", false, "", 0.0};
  const std::pair<double, double> settings[] = {
      {0.0, 0.0}, {0.0, 10.0}, {0.5, 0.0}, {5.0, 0.0}, {5.0, 5.0}};
  std::mt19937 rng(20260809u);
  std::uniform_real_distribution<double> uniform(0.0, 30.0);
  double worst_amp = 0.0, worst_obs = 0.0;
  for (const auto& [chi, delta] : settings) {
    const ModelConfig config = small_config(chi, delta);
    const SpectralCache cache(config);
    const Propagator propagator(build_hamiltonian(config));
    const Eigen::VectorXcd psi0 = initial_joint_state(config);
    for (int i = 0; i < 50; ++i) {
      const double t = uniform(rng);
      const CompareReport report =
          compare(cache.state_vector(t), propagator.evolve(psi0, t));
      worst_amp = std::max(worst_amp, report.amplitude);
      worst_obs = std::max({worst_obs, report.rho, report.f1, report.f2,
                            report.entropy});
    }
  }
  result.pass = worst_amp < 1e-8 && worst_obs < 1e-8;
  result.detail = fmt("max amplitude dev %.2e, max observable dev %.2e (tol 1e-8)",
                      worst_amp, worst_obs);
  return result;
}

CriterionResult criterion_conservation() {
  CriterionResult result{2, "norm and excitation conservation", false, "", 0.0};
  double worst_norm = 0.0, worst_exc = 0.0;
  for (const auto& name : sweep_preset_names()) {
    const Scenario scenario = preset_scenario(name);
    const SpectralCache cache(scenario.config);
    const double exc0 = mean_excitation(cache.state_vector(0.0));
    for (int i = 0; i < 200; ++i) {
      const double t = 25.0 * i / 199.0;
      const AmplitudeTable tab = cache.state_vector(t);
      worst_norm = std::max(worst_norm, std::abs(wavefunction_norm(tab) - 1.0));
      worst_exc = std::max(worst_exc, std::abs(mean_excitation(tab) - exc0));
    }
  }
  result.pass = worst_norm < 1e-10 && worst_exc < 1e-9;
  result.detail = fmt("max |norm-1| %.2e (tol 1e-10), max excitation drift %.2e "
                      "(tol 1e-9), presets fig1-fig7",
                      worst_norm, worst_exc);
  return result;
}

CriterionResult criterion_entropy_consistency() {
  CriterionResult result{3, "entropy consistency S_A = S_F", false, "", 0.0};
  const double ln4 = std::log(4.0);
  double worst_diff = 0.0, s_at_zero = 0.0, worst_over = 0.0;
  for (const char* name : {"fig1", "fig4"}) {
    const Scenario scenario = preset_scenario(name);
    const SpectralCache cache(scenario.config);
    for (int i = 0; i < 50; ++i) {
      const double t = 25.0 * i / 49.0;
      const AmplitudeTable tab = cache.state_vector(t);
      const double s_atom = atomic_entropy(atomic_density(tab));
      const double s_field = field_entropy(field_density(tab));
      worst_diff = std::max(worst_diff, std::abs(s_atom - s_field));
      worst_over = std::max(worst_over, s_atom - ln4);
      if (i == 0) s_at_zero = std::max(s_at_zero, std::abs(s_atom));
    }
  }
  result.pass = worst_diff < 1e-8 && s_at_zero <= 1e-9 && worst_over <= 1e-9;
  result.detail = fmt("max |S_A - S_F| %.2e (tol 1e-8), S(0) %.2e, max S - ln4 %.2e",
                      worst_diff, s_at_zero, worst_over);
  return result;
}

CriterionResult criterion_initial_conditions() {
  CriterionResult result{4, "initial-condition identities", false, "", 0.0};
  double worst = 0.0;
  for (const auto& name : preset_names()) {
    const Scenario scenario = preset_scenario(name);
    const AmplitudeTable tab = state_vector(0.0, scenario.config);
    const Complex g1 = scenario.config.atoms.gamma1;
    const Complex g4 = scenario.config.atoms.gamma4;
    for (int n = 0; n <= tab.cutoff; ++n) {
      worst = std::max(worst, std::abs(tab.A[n] - g1));
      worst = std::max(worst, std::abs(tab.E[n] - g4));
      worst = std::max(worst, std::abs(tab.B[n + 1]));
      worst = std::max(worst, std::abs(tab.D[n + 2]));
      if (n >= 1) worst = std::max(worst, std::abs(tab.G[n - 1]));
      if (n >= 2) worst = std::max(worst, std::abs(tab.H[n - 2]));
    }
  }
  result.pass = worst < 1e-10;
  result.detail = fmt("max deviation from (gamma1, gamma4, 0, ...) at t=0: %.2e "
                      "(tol 1e-10), all presets",
                      worst);
  return result;
}

CriterionResult criterion_squeezing_floor() {
  CriterionResult result{5, "uncertainty floor and F(0)", false, "", 0.0};
  double worst_floor = 0.0;  // most negative margin seen
  double worst_f0 = 0.0;
  for (const auto& name : sweep_preset_names()) {
    const Scenario scenario = preset_scenario(name);
    const SpectralCache cache(scenario.config);
    for (int i = 0; i < 200; ++i) {
      const double t = 25.0 * i / 199.0;
      const Eigen::Matrix4cd rho = atomic_density(cache.state_vector(t));
      const CollectiveMoments m = collective_expectations(rho);
      const double jx = 0.5 * (m.jplus + m.jminus).real();
      const double jy = (Complex(0.0, -0.5) * (m.jplus - m.jminus)).real();
      const double var_x =
          0.25 * (m.jplus2 + m.jminus2).real() + 0.25 * m.anticommutator -
          jx * jx;
      const double var_y =
          -0.25 * (m.jplus2 + m.jminus2).real() + 0.25 * m.anticommutator -
          jy * jy;
      const double product = std::sqrt(std::max(var_x, 0.0)) *
                             std::sqrt(std::max(var_y, 0.0));
      const double margin = product - 0.5 * std::abs(m.jz);
      worst_floor = std::min(worst_floor, margin);
      if (i == 0) {
        const SqueezingValues sq = squeezing_parameters(rho);
        worst_f0 = std::max({worst_f0, std::abs(sq.f1 - 0.5),
                             std::abs(sq.f2 - 0.5)});
      }
    }
  }
  result.pass = worst_floor >= -1e-10 && worst_f0 < 1e-10;
  result.detail = fmt("min dJx dJy - |<Jz>|/2 margin %.2e (tol -1e-10), "
                      "max |F(0) - 1/2| %.2e (tol 1e-10)",
                      worst_floor, worst_f0);
  return result;
}

CriterionResult criterion_collapse_revival() {
  CriterionResult result{6, "collapse and revival of the inversion", false, "",
                         0.0};
  const Scenario scenario = preset_scenario("fig1");
  const SpectralCache cache(scenario.config);
  const int samples = 2001;
  const double t_max = 25.0;
  std::vector<double> inv(samples);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < samples; ++i) {
    const double t = t_max * i / (samples - 1);
    inv[i] = inversion(atomic_density(cache.state_vector(t)));
  }
  const double dt = t_max / (samples - 1);
  const int window = static_cast<int>(std::lround(1.0 / dt));
  const auto envelope = [&](int start) {
    double lo = inv[start], hi = inv[start];
    for (int j = start; j <= start + window; ++j) {
      lo = std::min(lo, inv[j]);
      hi = std::max(hi, inv[j]);
    }
    return hi - lo;
  };
  const double env0 = envelope(0);
  double collapse_min = env0, revival_max = 0.0;
  double collapse_at = 0.0, revival_at = 0.0;
  for (int start = 0; start + window < samples; ++start) {
    const double t_start = start * dt;
    const double env = envelope(start);
    if (t_start >= 1.0 && t_start + 1.0 <= 8.0 && env < collapse_min) {
      collapse_min = env;
      collapse_at = t_start;
    }
    if (t_start >= 8.0 && t_start + 1.0 <= 25.0 && env > revival_max) {
      revival_max = env;
      revival_at = t_start;
    }
  }
  const bool collapsed = collapse_min < 0.2 * env0;
  const bool revived = revival_max > 0.5 * env0;
  result.pass = collapsed && revived;
  result.detail =
      fmt("env0 %.4f; min env ratio %.3f at t=%.2f in (1,8) (need < 0.2); "
          "max env ratio %.3f at t=%.2f in (8,25) (need > 0.5)",
          env0, collapse_min / env0, collapse_at, revival_max / env0,
          revival_at);
  return result;
}

CriterionResult criterion_husimi_normalization() {
  CriterionResult result{7, "Husimi normalization", false, "", 0.0};
  double worst_four = 0.0, worst_two = 0.0;
  for (const char* name : {"fig8a", "fig9"}) {
    const Scenario scenario = preset_scenario(name);
    const SpectralCache cache(scenario.config);
    for (const double t : {0.0, kPi / 4, kPi / 2}) {
      const AmplitudeTable tab = cache.state_vector(t);
      const QGrid four =
          q_grid(tab, -12.0, 12.0, -12.0, 12.0, 256, 256, QMode::FourTerm);
      const QGrid two =
          q_grid(tab, -12.0, 12.0, -12.0, 12.0, 256, 256, QMode::TwoTerm);
      worst_four = std::max(worst_four, std::abs(grid_integral(four) - 1.0));
      worst_two = std::max(worst_two, grid_integral(two) - 1.0);
    }
  }
  result.pass = worst_four < 5e-3 && worst_two <= 5e-3;
  result.detail = fmt("max |four-term integral - 1| %.2e (tol 5e-3), "
                      "max two-term excess %.2e",
                      worst_four, worst_two);
  return result;
}

CriterionResult criterion_cat_structure() {
  CriterionResult result{8, "multi-component phase-space structure", false, "",
                         0.0};
  using clock = std::chrono::steady_clock;
  const Scenario kerr = preset_scenario("fig9");
  const SpectralCache cache(kerr.config);
  const struct {
    double t;
    int expected;
  } cases[] = {{0.0, 1}, {kPi / 2, 2}, {kPi / 4, 4}};
  std::string counts;
  bool blobs_ok = true;
  double slowest = 0.0;
  for (const auto& c : cases) {
    const auto start = clock::now();
    const QGrid grid = q_grid(cache.state_vector(c.t), -12.0, 12.0, -12.0,
                              12.0, 256, 256, QMode::FourTerm);
    slowest = std::max(
        slowest, std::chrono::duration<double>(clock::now() - start).count());
    const int blobs = blob_count(grid, 0.2);
    blobs_ok = blobs_ok && blobs == c.expected;
    counts += fmt("%s%d (expect %d)", counts.empty() ? "" : ", ", blobs,
                  c.expected);
  }
  const Scenario linear = preset_scenario("fig8a");
  const auto start = clock::now();
  const QGrid grid = q_grid(state_vector(kPi / 4, linear.config), -12.0, 12.0,
                            -12.0, 12.0, 256, 256, QMode::FourTerm);
  slowest = std::max(
      slowest, std::chrono::duration<double>(clock::now() - start).count());
  const GridPeak peak = grid_peak(grid);
  const double radius = std::hypot(peak.x, peak.y);
  const bool radius_ok = radius >= 6.0 && radius <= 8.5;
  result.pass = blobs_ok && radius_ok && slowest < 30.0;
  result.detail = fmt("blob counts [%s]; chi=0 peak radius %.2f (need [6, 8.5]); "
                      "slowest grid %.2f s (limit 30)",
                      counts.c_str(), radius, slowest);
  return result;
}

CriterionResult criterion_closed_form_entropy() {
  CriterionResult result{9, "closed-form entropy path", false, "", 0.0};
  std::mt19937 rng(424242u);
  double worst_root = 0.0, worst_residual = 0.0;
  int disabled = 0;
  for (int i = 0; i < 100; ++i) {
    const Eigen::Matrix4cd rho = random_symmetric_rho(rng);
    const Eigen::Vector4d numeric = eigenvalues_numeric(rho);
    const QuarticCoefficients c = quartic_coefficients(rho);
    for (int k = 0; k < 4; ++k) {
      const double x = numeric(k);
      const double value = c.c0 + x * (c.c1 + x * (c.c2 + x * (c.c3 + x)));
      worst_residual = std::max(worst_residual, std::abs(value));
    }
    const auto closed = eigenvalues_closed_form(c);
    if (!closed) {
      ++disabled;
      continue;
    }
    worst_root =
        std::max(worst_root, (*closed - numeric).cwiseAbs().maxCoeff());
  }
  result.pass = disabled == 0 && worst_root < 1e-7 && worst_residual < 1e-8;
  result.detail = fmt("max root dev %.2e (tol 1e-7), max polynomial residual "
                      "%.2e (tol 1e-8), %d/100 unresolved",
                      worst_root, worst_residual, disabled);
  return result;
}

CriterionResult criterion_oracle_large() {
  CriterionResult result{10, "oracle spot checks (M=50)", false, "", 0.0};
  double worst_amp = 0.0, worst_obs = 0.0;
  for (const char* name : {"fig1", "fig4"}) {
    const Scenario scenario = preset_scenario(name);
    const SpectralCache cache(scenario.config);
    const Propagator propagator(build_hamiltonian(scenario.config));
    const Eigen::VectorXcd psi0 = initial_joint_state(scenario.config);
    for (const double t : {0.5, kPi / 4, 5.0, 20.0}) {
      const CompareReport report =
          compare(cache.state_vector(t), propagator.evolve(psi0, t));
      worst_amp = std::max(worst_amp, report.amplitude);
      worst_obs = std::max({worst_obs, report.rho, report.f1, report.f2,
                            report.entropy});
    }
  }
  result.pass = worst_amp < 1e-6 && worst_obs < 1e-8;
  result.detail = fmt("max amplitude dev %.2e (tol 1e-6), max observable dev "
                      "%.2e (tol 1e-8)",
                      worst_amp, worst_obs);
  return result;
}

CriterionResult timed(CriterionResult (*criterion)()) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  CriterionResult result = criterion();
  result.seconds = std::chrono::duration<double>(clock::now() - start).count();
  // Criterion 1 carries its own runtime budget.
  if (result.index == 1 && result.seconds >= 60.0) {
    result.pass = false;
    result.detail += fmt("; runtime %.1f s exceeds 60 s budget", result.seconds);
  }
  return result;
}

}  // namespace

CriterionResult run_criterion(int index) {
  switch (index) {
    case 1: return timed(criterion_oracle_small);
    case 2: return timed(criterion_conservation);
    case 3: return timed(criterion_entropy_consistency);
    case 4: return timed(criterion_initial_conditions);
    case 5: return timed(criterion_squeezing_floor);
    case 6: return timed(criterion_collapse_revival);
    case 7: return timed(criterion_husimi_normalization);
    case 8: return timed(criterion_cat_structure);
    case 9: return timed(criterion_closed_form_entropy);
    case 10: return timed(criterion_oracle_large);
    default:
      throw std::invalid_argument("run_criterion: index must be 1..10");
  }
}

int criterion_count(VerifyScale scale) {
  return scale == VerifyScale::Small ? 9 : 10;
}

std::vector<CriterionResult> run_acceptance(VerifyScale scale) {
  std::vector<CriterionResult> results;
  const int count = criterion_count(scale);
  results.reserve(count);
  for (int i = 1; i <= count; ++i) results.push_back(run_criterion(i));
  return results;
}

void print_results(const std::vector<CriterionResult>& results,
                   std::ostream& out) {
  for (const CriterionResult& r : results)
    out << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << r.index << " ("
        << r.name << "): " << r.detail << " [" << fmt("%.2f", r.seconds)
        << " s]\n";
}

}  // namespace tcm
