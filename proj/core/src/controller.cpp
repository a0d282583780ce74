#include "cta/controller.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cta {

namespace {

void require_step(double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw std::invalid_argument("controller: step size must be positive");
  }
}

}  // namespace

std::string_view to_string(Method m) {
  return m == Method::kExplicit ? "explicit" : "implicit";
}

Method parse_method(std::string_view text) {
  if (text == "explicit") return Method::kExplicit;
  if (text == "implicit") return Method::kImplicit;
  throw std::invalid_argument("unknown method '" + std::string(text) +
                              "' (expected explicit|implicit)");
}

std::string_view to_string(DisturbanceEstimate e) {
  return e == DisturbanceEstimate::kNone ? "none" : "one-step";
}

DisturbanceEstimate parse_disturbance_estimate(std::string_view text) {
  if (text == "none") return DisturbanceEstimate::kNone;
  if (text == "one-step") return DisturbanceEstimate::kOneStep;
  throw std::invalid_argument("unknown disturbance estimate '" + std::string(text) +
                              "' (expected none|one-step)");
}

Gains::Gains(double kp1, double kp2, double kp3, double kp4, double scale)
    : kp1_(kp1), kp2_(kp2), kp3_(kp3), kp4_(kp4), scale_(scale) {
  for (double v : {kp1, kp2, kp3, kp4, scale}) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("Gains: kp1..kp4 and L must be positive and finite");
    }
  }
}

ControllerState ControllerState::initial(double z1, double z2, double eta) {
  ControllerState s;
  s.eta = eta;
  s.zbar1 = z1;
  s.zbar2 = z2;
  s.zbar3 = eta;
  return s;
}

StepResult explicit_step(double z1, double z2, const ControllerState& state,
                         const Gains& g, double h) {
  require_step(h);
  StepResult r;
  r.out.u1 = -g.kp1() * signed_power(z1, 1.0 / 3.0) - g.kp2() * signed_power(z2, 0.5);
  r.out.u = r.out.u1 + state.eta;
  r.out.eta_next = state.eta - h * g.kp3() * sign_selection(z1) -
                   h * g.kp4() * sign_selection(z2);
  r.next = state;
  r.next.eta = r.out.eta_next;
  return r;
}

Interval stage1_cone(const ControllerState& state, const Gains& g) {
  const double a = g.kp1() * std::cbrt(std::abs(state.zbar1));
  const double b = g.kp2() * std::sqrt(std::abs(state.zbar2));
  if (std::isnan(a) || std::isnan(b)) {
    throw std::invalid_argument("stage1_cone: non-finite predicted state");
  }
  return Interval(a - b, a + b);
}

Stage1Result implicit_stage1(double z1, double z2, const ControllerState& state,
                             const Gains& g, double h) {
  require_step(h);
  // Unknown is w = h*u1: w in h*a*sgn(-z2 - z1/h - w) + h*b*sgn(-z2 - w).
  const Interval cone = stage1_cone(state, g).scaled(h);
  const double w = nested_projection(cone, -z2 - z1 / h, -z2);
  Stage1Result r;
  r.u1 = w / h;
  r.ztilde2 = z2 + w;
  r.ztilde1 = z1 + h * r.ztilde2;
  return r;
}

Stage2Result implicit_stage2(double z1, double z2, double u1, double eta,
                             double z3_estimate, const Gains& g, double h) {
  require_step(h);
  if (!(g.kp3() > g.kp4())) {
    throw std::invalid_argument("implicit_stage2: requires kp3 > kp4");
  }
  const double v = (z2 + h * u1) / h;
  const double y1 = v + z3_estimate;
  const double y2 = z1 / (h * h) + v + z3_estimate;
  const Interval cone(h * (g.kp3() - g.kp4()), h * (g.kp3() + g.kp4()));

  Stage2Result r;
  r.increment = nested_projection(cone, -y2, -y1);
  r.eta_next = eta + r.increment;
  r.zbar3 = z3_estimate + r.increment;
  r.zbar2 = z2 + h * u1 + h * r.zbar3;
  r.zbar1 = z1 + h * z2 + h * h * u1 + h * h * r.zbar3;
  return r;
}

StepResult implicit_step(double z1, double z2, const ControllerState& state,
                         const Gains& g, double h, DisturbanceEstimate estimate) {
  require_step(h);
  double delta_hat = 0.0;
  if (estimate == DisturbanceEstimate::kOneStep && state.has_prev) {
    // z2 advanced as z2_prev + h*(u_prev + delta_prev).
    delta_hat = (z2 - state.prev_z2) / h - state.prev_u;
  }

  const Stage1Result s1 = implicit_stage1(z1, z2, state, g, h);
  const Stage2Result s2 =
      implicit_stage2(z1, z2, s1.u1, state.eta, state.eta + delta_hat, g, h);

  StepResult r;
  r.out.u1 = s1.u1;
  r.out.eta_next = s2.eta_next;
  r.out.u = s1.u1 + s2.eta_next;

  r.next.eta = s2.eta_next;
  r.next.zbar1 = s2.zbar1;
  r.next.zbar2 = s2.zbar2;
  r.next.zbar3 = s2.zbar3;
  r.next.prev_z2 = z2;
  r.next.prev_u = r.out.u;
  r.next.delta_hat = delta_hat;
  r.next.has_prev = true;
  return r;
}

StepResult controller_step(Method method, double z1, double z2,
                           const ControllerState& state, const Gains& g, double h,
                           DisturbanceEstimate estimate) {
  return method == Method::kExplicit ? explicit_step(z1, z2, state, g, h)
                                     : implicit_step(z1, z2, state, g, h, estimate);
}

}  // namespace cta
