#include "cta/plant.hpp"

#include <cmath>
#include <string>

namespace cta {

std::string_view to_string(PlantScheme s) {
  return s == PlantScheme::kForward ? "forward" : "symplectic";
}

PlantScheme parse_plant_scheme(std::string_view text) {
  if (text == "forward") return PlantScheme::kForward;
  if (text == "symplectic") return PlantScheme::kSymplectic;
  throw std::invalid_argument("unknown plant scheme '" + std::string(text) +
                              "' (expected forward|symplectic)");
}

Disturbance Disturbance::reference() {
  Disturbance d;
  d.constant = 35.0;
  d.terms = {{0.6, 2.0, Sinusoid::Shape::kCos},
             {0.4, std::sqrt(10.0), Sinusoid::Shape::kSin}};
  return d;
}

DisturbanceSample eval_disturbance(const Disturbance& d, double t) {
  DisturbanceSample s{d.constant, 0.0};
  for (const Sinusoid& term : d.terms) {
    const double phase = term.frequency * t;
    if (term.shape == Sinusoid::Shape::kSin) {
      s.value += term.amplitude * std::sin(phase);
      s.rate += term.amplitude * term.frequency * std::cos(phase);
    } else {
      s.value += term.amplitude * std::cos(phase);
      s.rate -= term.amplitude * term.frequency * std::sin(phase);
    }
  }
  return s;
}

PlantState plant_step(const PlantState& s, double u, double delta, double h,
                      PlantScheme scheme) {
  if (!(h > 0.0)) {
    throw std::invalid_argument("plant_step: step size must be positive");
  }
  PlantState next;
  next.z2 = s.z2 + h * u + h * delta;
  next.z1 = s.z1 + h * (scheme == PlantScheme::kForward ? s.z2 : next.z2);
  return next;
}

void SimConfig::validate() const {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw std::invalid_argument("SimConfig: h must be positive");
  }
  if (!(t_final > 0.0) || !std::isfinite(t_final)) {
    throw std::invalid_argument("SimConfig: t_final must be positive");
  }
  if (!std::isfinite(z1_0) || !std::isfinite(z2_0) || !std::isfinite(eta_0)) {
    throw std::invalid_argument("SimConfig: initial state must be finite");
  }
  if (method == Method::kImplicit && !(gains.kp3() > gains.kp4())) {
    throw std::invalid_argument("SimConfig: implicit method requires kp3 > kp4");
  }
}

std::size_t SimConfig::step_count() const {
  validate();
  const double n = std::round(t_final / h);
  if (n < 1.0) {
    throw std::invalid_argument("SimConfig: t_final shorter than one step");
  }
  return static_cast<std::size_t>(n);
}

SimTrace run_simulation(const SimConfig& cfg) {
  return run_simulation(cfg, [&d = cfg.disturbance](double t) {
    return eval_disturbance(d, t).value;
  });
}

SimTrace run_simulation(const SimConfig& cfg, const DisturbanceFn& disturbance) {
  const std::size_t steps = cfg.step_count();
  const double h = cfg.h;
  const double scale = cfg.gains.scale();

  SimTrace trace;
  trace.h = h;
  trace.scale = scale;
  trace.records.reserve(steps + 1);

  PlantState plant{cfg.z1_0, cfg.z2_0};
  ControllerState ctrl = ControllerState::initial(cfg.z1_0, cfg.z2_0, cfg.eta_0);
  double z3 = cfg.eta_0 + disturbance(0.0);

  for (std::size_t k = 0;; ++k) {
    const double t = static_cast<double>(k) * h;
    const double delta = disturbance(t);
    const StepResult step = controller_step(cfg.method, plant.z1, plant.z2, ctrl,
                                            cfg.gains, h, cfg.estimate);

    TraceRecord rec;
    rec.t = t;
    rec.z1 = plant.z1;
    rec.z2 = plant.z2;
    rec.z3 = z3;
    rec.x1 = plant.z1 / scale;
    rec.x2 = plant.z2 / scale;
    rec.x3 = z3 / scale;
    rec.u = step.out.u;
    rec.u1 = step.out.u1;
    rec.eta = ctrl.eta;
    rec.delta = delta;
    trace.records.push_back(rec);

    if (k == steps) break;

    plant = plant_step(plant, step.out.u, delta, h, cfg.plant);
    // Integral action that entered u_k: eta_k (explicit) or eta_{k+1} (implicit).
    const double eta_applied =
        cfg.method == Method::kExplicit ? ctrl.eta : step.out.eta_next;
    z3 = eta_applied + delta;
    ctrl = step.next;

    const bool finite = std::isfinite(plant.z1) && std::isfinite(plant.z2) &&
                        std::isfinite(ctrl.eta);
    if (!finite || std::abs(plant.z1) > kDivergenceBound ||
        std::abs(plant.z2) > kDivergenceBound || std::abs(ctrl.eta) > kDivergenceBound) {
      throw DivergenceError(k + 1, "simulation diverged at step " + std::to_string(k + 1));
    }
  }
  return trace;
}

}  // namespace cta
