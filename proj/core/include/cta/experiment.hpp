#pragma once

// Experiment presets, key/value configuration, run summaries and step-size
// sweeps used by the cta_sim tool and the acceptance suite.

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cta/metrics.hpp"
#include "cta/plant.hpp"

namespace cta {

/// Bad preset name, override key or value. Maps to CLI exit status 1.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ExperimentPreset {
  std::string name;
  SimConfig cfg;
};

/// "paper-explicit", "paper-implicit", "zero".
const std::vector<ExperimentPreset>& presets();
SimConfig preset_config(std::string_view name);

using KeyValues = std::vector<std::pair<std::string, std::string>>;

/// Recognized keys:
///   method, h, t_final, gains (kp1,kp2,kp3,kp4), kp1..kp4, scale (L),
///   init (z1,z2,eta), z1_0, z2_0, eta_0, plant (forward|symplectic),
///   disturbance_estimate (none|one-step), disturbance (reference|zero),
///   disturbance.constant, disturbance.terms ("amp sin|cos freq; ...").
void apply_override(SimConfig& cfg, std::string_view key, std::string_view value);
void apply_overrides(SimConfig& cfg, const KeyValues& kv);

/// Flat `key = value` lines; '#' starts a comment. Throws UsageError.
KeyValues parse_config(std::istream& is);

/// Splits "a,b,c" into doubles; throws UsageError on bad fields or count.
std::vector<double> parse_number_list(std::string_view text, std::size_t expected = 0);

inline constexpr double kDefaultConvergenceThreshold = 0.01;

struct RunSummary {
  std::string method;
  double h = 0.0;
  double t_final = 0.0;
  double threshold = kDefaultConvergenceThreshold;
  double convergence_time_s = kNeverConverged;
  PrecisionReport precision;
  ChatterReport chatter;
};

/// For runs shorter than window.end the window keeps its length and is shifted
/// to end at t_final (clamped at t = 0).
Window fit_window(Window window, double t_final);

/// Metrics are taken over fit_window(window, cfg.t_final).
RunSummary summarize(const SimConfig& cfg, const SimTrace& trace,
                     double threshold = kDefaultConvergenceThreshold,
                     Window window = Window{});

/// {convergence_time_s, window, sup_abs_x, v_constants, tv_u, sign_flips, ...};
/// a run that never converges reports convergence_time_s = null.
std::string summary_json(const RunSummary& s);

struct SweepSpec {
  SimConfig base;
  std::vector<double> h_values;
  Window window;
  Orders orders{1.0, 1.0, 1.0};  // only used for v constants in the table
};

struct SweepRow {
  double h = 0.0;
  std::array<double, 3> sup_abs_x{};
  bool diverged = false;
};

struct SweepTable {
  std::vector<SweepRow> rows;
  /// Least-squares slope of log sup|x_i| against log h over converged rows
  /// with nonzero sup; empty when fewer than two such rows exist.
  std::array<std::optional<double>, 3> slopes;
};

/// Needs at least three step sizes. Member runs execute concurrently.
SweepTable run_sweep(const SweepSpec& spec);

std::optional<double> fit_loglog_slope(const std::vector<double>& x,
                                       const std::vector<double>& y);

/// kind,h,sup_abs_x1,sup_abs_x2,sup_abs_x3 with kind in {run,diverged,slope}.
void write_sweep_csv(std::ostream& os, const SweepTable& table);

}  // namespace cta
