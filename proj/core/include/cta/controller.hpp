#pragma once

// Continuous twisting control law for the scaled double integrator
//
//   z1' = z2,   z2' = u + delta,   u = -kp1 [z1]^(1/3) - kp2 [z2]^(1/2) + eta,
//   eta' in -kp3 sgn(z1) - kp4 sgn(z2),
//
// discretized either by forward Euler or by the two-stage implicit scheme
// whose set-valued terms are resolved with nested interval projections.

#include <string_view>

#include "cta/resolvent.hpp"

namespace cta {

enum class Method { kExplicit, kImplicit };

std::string_view to_string(Method m);
/// Parses "explicit" / "implicit"; throws std::invalid_argument otherwise.
Method parse_method(std::string_view text);

/// How Stage II forms its estimate of z3 = eta + delta.
enum class DisturbanceEstimate {
  kNone,     // z3 ~ eta (nominal case, delta assumed zero)
  kOneStep,  // z3 ~ eta + delta reconstructed from the last measured step
};

std::string_view to_string(DisturbanceEstimate e);
DisturbanceEstimate parse_disturbance_estimate(std::string_view text);

/// Scaled CTA gains plus the state scaling factor L (used for reporting only).
/// All values must be positive; throws std::invalid_argument otherwise.
class Gains {
 public:
  Gains(double kp1, double kp2, double kp3, double kp4, double scale = 1.0);

  double kp1() const { return kp1_; }
  double kp2() const { return kp2_; }
  double kp3() const { return kp3_; }
  double kp4() const { return kp4_; }
  double scale() const { return scale_; }

  friend bool operator==(const Gains&, const Gains&) = default;

 private:
  double kp1_, kp2_, kp3_, kp4_, scale_;
};

struct ControllerState {
  double eta = 0.0;
  // Predicted magnitudes carried between implicit steps.
  double zbar1 = 0.0;
  double zbar2 = 0.0;
  double zbar3 = 0.0;
  // One-step disturbance reconstruction (implicit method).
  double prev_z2 = 0.0;
  double prev_u = 0.0;
  double delta_hat = 0.0;
  bool has_prev = false;

  /// Seeds the predicted magnitudes with the measured initial state.
  static ControllerState initial(double z1, double z2, double eta);

  friend bool operator==(const ControllerState&, const ControllerState&) = default;
};

struct ControlOutput {
  double u = 0.0;         // total input
  double u1 = 0.0;        // homogeneous feedback part
  double eta_next = 0.0;  // integrator after the step
};

struct StepResult {
  ControlOutput out;
  ControllerState next;
};

struct Stage1Result {
  double u1 = 0.0;
  double ztilde1 = 0.0;
  double ztilde2 = 0.0;
};

struct Stage2Result {
  double eta_next = 0.0;
  double increment = 0.0;
  double zbar1 = 0.0;
  double zbar2 = 0.0;
  double zbar3 = 0.0;
};

/// Forward-Euler CTA: u = u1 + eta_k with sgn(0) = 0.
StepResult explicit_step(double z1, double z2, const ControllerState& state,
                         const Gains& g, double h);

/// [a - b, a + b] with a = kp1|zbar1|^(1/3), b = kp2|zbar2|^(1/2). The lower
/// end goes negative whenever b > a.
Interval stage1_cone(const ControllerState& state, const Gains& g);

/// Implicit resolution of u1 in -a sgn(z1 + h*z2 + h^2*u1) - b sgn(z2 + h*u1)
/// with a, b frozen at the previous predicted magnitudes.
Stage1Result implicit_stage1(double z1, double z2, const ControllerState& state,
                             const Gains& g, double h);

/// Implicit integrator update given Stage I's u1 and an estimate of z3_k.
/// Requires kp3 > kp4.
Stage2Result implicit_stage2(double z1, double z2, double u1, double eta,
                             double z3_estimate, const Gains& g, double h);

/// Stage I followed by Stage II; u = u1 + eta_{k+1}.
StepResult implicit_step(double z1, double z2, const ControllerState& state,
                         const Gains& g, double h,
                         DisturbanceEstimate estimate = DisturbanceEstimate::kOneStep);

StepResult controller_step(Method method, double z1, double z2,
                           const ControllerState& state, const Gains& g, double h,
                           DisturbanceEstimate estimate = DisturbanceEstimate::kOneStep);

}  // namespace cta
