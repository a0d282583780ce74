#pragma once

#include <array>
#include <cstddef>
#include <limits>

#include "cta/plant.hpp"

namespace cta {

/// Closed time window [start, end] in seconds. Record times within
/// kWindowTolerance of an endpoint count as inside.
struct Window {
  double start = 8.0;
  double end = 10.0;
  bool operator==(const Window&) const = default;
};

inline constexpr double kWindowTolerance = 1e-9;

using Orders = std::array<double, 3>;

inline constexpr Orders kExplicitOrders{3.0, 2.0, 1.0};
inline constexpr Orders kImplicitOrders{4.0, 3.0, 2.0};

Orders nominal_orders(Method method);

struct PrecisionReport {
  Window window;
  std::array<double, 3> sup_abs_x{};
  std::array<double, 3> v_constants{};  // sup|x_i| / h^{p_i}
  std::size_t samples = 0;
};

/// Sup-norm of x1, x2, x3 over the window and the implied constants.
/// Throws std::invalid_argument if the window holds no record or h <= 0.
PrecisionReport precision_envelope(const SimTrace& trace, Window window, double h,
                                   const Orders& orders);

inline constexpr double kNeverConverged = std::numeric_limits<double>::infinity();

/// Earliest record time after which |z1| and |z2| stay strictly below the
/// threshold; kNeverConverged if the last record violates it.
double convergence_time(const SimTrace& trace, double threshold);

struct ChatterReport {
  double total_variation_u = 0.0;
  std::size_t sign_flips = 0;  // sign changes of u_{k+1} - u_k
};

ChatterReport chatter_metrics(const SimTrace& trace, Window window);

}  // namespace cta
