#include "cta/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cta {

namespace {

bool in_window(double t, const Window& w) {
  return t >= w.start - kWindowTolerance && t <= w.end + kWindowTolerance;
}

}  // namespace

Orders nominal_orders(Method method) {
  return method == Method::kExplicit ? kExplicitOrders : kImplicitOrders;
}

PrecisionReport precision_envelope(const SimTrace& trace, Window window, double h,
                                   const Orders& orders) {
  if (!(h > 0.0)) {
    throw std::invalid_argument("precision_envelope: h must be positive");
  }
  PrecisionReport r;
  r.window = window;
  for (const TraceRecord& rec : trace.records) {
    if (!in_window(rec.t, window)) continue;
    ++r.samples;
    r.sup_abs_x[0] = std::max(r.sup_abs_x[0], std::abs(rec.x1));
    r.sup_abs_x[1] = std::max(r.sup_abs_x[1], std::abs(rec.x2));
    r.sup_abs_x[2] = std::max(r.sup_abs_x[2], std::abs(rec.x3));
  }
  if (r.samples == 0) {
    throw std::invalid_argument("precision_envelope: empty window");
  }
  for (std::size_t i = 0; i < 3; ++i) {
    r.v_constants[i] = r.sup_abs_x[i] / std::pow(h, orders[i]);
  }
  return r;
}

double convergence_time(const SimTrace& trace, double threshold) {
  if (!(threshold > 0.0)) {
    throw std::invalid_argument("convergence_time: threshold must be positive");
  }
  const auto& recs = trace.records;
  if (recs.empty()) return kNeverConverged;
  double t_conv = kNeverConverged;
  for (auto it = recs.rbegin(); it != recs.rend(); ++it) {
    if (std::abs(it->z1) >= threshold || std::abs(it->z2) >= threshold) break;
    t_conv = it->t;
  }
  return t_conv;
}

ChatterReport chatter_metrics(const SimTrace& trace, Window window) {
  ChatterReport r;
  bool have_prev_u = false;
  double prev_u = 0.0;
  double prev_sign = 0.0;
  std::size_t samples = 0;
  for (const TraceRecord& rec : trace.records) {
    if (!in_window(rec.t, window)) continue;
    ++samples;
    if (have_prev_u) {
      const double diff = rec.u - prev_u;
      r.total_variation_u += std::abs(diff);
      const double s = diff > 0.0 ? 1.0 : (diff < 0.0 ? -1.0 : 0.0);
      if (s != 0.0) {
        if (prev_sign != 0.0 && s != prev_sign) ++r.sign_flips;
        prev_sign = s;
      }
    }
    prev_u = rec.u;
    have_prev_u = true;
  }
  if (samples == 0) {
    throw std::invalid_argument("chatter_metrics: empty window");
  }
  return r;
}

}  // namespace cta
