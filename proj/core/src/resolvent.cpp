#include "cta/resolvent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cta {

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (std::isnan(lo) || std::isnan(hi)) {
    throw std::invalid_argument("Interval: NaN bound");
  }
  if (lo > hi) {
    throw std::invalid_argument("Interval: lo > hi (" + std::to_string(lo) +
                                " > " + std::to_string(hi) + ")");
  }
}

Interval Interval::scaled(double factor) const {
  if (!(factor >= 0.0)) {
    throw std::invalid_argument("Interval::scaled: negative factor");
  }
  return Interval(factor * lo_, factor * hi_);
}

double Interval::distance(double x) const {
  if (x < lo_) return lo_ - x;
  if (x > hi_) return x - hi_;
  return 0.0;
}

double proj(const Interval& set, double x) {
  return std::clamp(x, set.lo(), set.hi());
}

Interval sgn_set(double x) {
  if (x > 0.0) return Interval::point(1.0);
  if (x < 0.0) return Interval::point(-1.0);
  return Interval(-1.0, 1.0);
}

double sign_selection(double x) {
  if (x > 0.0) return 1.0;
  if (x < 0.0) return -1.0;
  return 0.0;
}

double signed_power(double x, double p) {
  return std::pow(std::abs(x), p) * sign_selection(x);
}

double solve_sgnsat(double gain, double y) {
  if (!(gain >= 0.0)) {
    throw std::invalid_argument("solve_sgnsat: gain must be >= 0");
  }
  return proj(Interval::symmetric(gain), y);
}

Interval solve_interval_sgn(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::invalid_argument("solve_interval_sgn: gains must be positive");
  }
  const Interval cone(a - b, a + b);
  return Interval(proj(cone.negated(), x), proj(cone, x));
}

double nested_projection(const Interval& cone, double x, double y) {
  if (cone.lo() + cone.hi() < 0.0) {
    throw std::invalid_argument("nested_projection: cone must satisfy lo + hi >= 0");
  }
  // Interval construction asserts the inner bounds stay ordered.
  const Interval inner(proj(cone.negated(), y), proj(cone, y));
  return proj(inner, x);
}

double solve_two_sgn(double a, double b, double x, double y) {
  if (!(a > 0.0) || !(b >= 0.0)) {
    throw std::invalid_argument("solve_two_sgn: need A > 0 and B >= 0");
  }
  return nested_projection(Interval(a - b, a + b), x, y);
}

}  // namespace cta
