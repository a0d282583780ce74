#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cta/controller.hpp"

namespace cta {

struct PlantState {
  double z1 = 0.0;
  double z2 = 0.0;
};

/// Discretization of the double integrator.
enum class PlantScheme {
  kForward,     // z1 += h*z2_k;     z2 += h*(u + delta)
  kSymplectic,  // z2 += h*(u + delta); z1 += h*z2_{k+1}
};

std::string_view to_string(PlantScheme s);
PlantScheme parse_plant_scheme(std::string_view text);

struct Sinusoid {
  enum class Shape { kSin, kCos };
  double amplitude = 0.0;
  double frequency = 0.0;  // rad/s
  Shape shape = Shape::kSin;

  friend bool operator==(const Sinusoid&, const Sinusoid&) = default;
};

/// delta(t) = constant + sum of sinusoids.
struct Disturbance {
  double constant = 0.0;
  std::vector<Sinusoid> terms;

  /// 35 + 0.6 cos(2t) + 0.4 sin(sqrt(10) t)
  static Disturbance reference();

  friend bool operator==(const Disturbance&, const Disturbance&) = default;
};

struct DisturbanceSample {
  double value = 0.0;
  double rate = 0.0;  // exact time derivative
};

DisturbanceSample eval_disturbance(const Disturbance& d, double t);

PlantState plant_step(const PlantState& s, double u, double delta, double h,
                      PlantScheme scheme = PlantScheme::kForward);

struct SimConfig {
  double h = 1e-3;
  double t_final = 10.0;
  Method method = Method::kImplicit;
  Gains gains{160.236, 60.3738, 28.5, 15.0, 5.0};
  double z1_0 = 0.0;
  double z2_0 = 0.0;
  double eta_0 = 0.0;
  Disturbance disturbance;
  PlantScheme plant = PlantScheme::kSymplectic;
  DisturbanceEstimate estimate = DisturbanceEstimate::kOneStep;

  /// round(t_final / h); throws std::invalid_argument on a bad config.
  std::size_t step_count() const;
  void validate() const;
};

/// One row per time instant t_k = k*h.
///
/// z1, z2, eta and delta are sampled at t_k. u and u1 are the input computed
/// from that row's state (for the last row it is evaluated but not applied).
/// z3 is the lumped term eta + delta that entered z2 on the step ending at
/// t_k; row 0 holds eta_0 + delta_0. x_i = z_i / L.
struct TraceRecord {
  double t = 0.0;
  double z1 = 0.0, z2 = 0.0, z3 = 0.0;
  double x1 = 0.0, x2 = 0.0, x3 = 0.0;
  double u = 0.0, u1 = 0.0;
  double eta = 0.0, delta = 0.0;

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

struct SimTrace {
  double h = 0.0;
  double scale = 1.0;
  std::vector<TraceRecord> records;
};

class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(std::size_t step, const std::string& what)
      : std::runtime_error(what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

/// Any |state| above this aborts the run.
inline constexpr double kDivergenceBound = 1e12;

/// Controller step then plant step, step_count() times. The controller only
/// sees (z1, z2) and its own state. Throws DivergenceError.
SimTrace run_simulation(const SimConfig& cfg);

/// Same loop with an arbitrary disturbance signal t -> delta(t) in place of
/// cfg.disturbance.
using DisturbanceFn = std::function<double(double)>;
SimTrace run_simulation(const SimConfig& cfg, const DisturbanceFn& disturbance);

}  // namespace cta
