#pragma once

// Closed intervals, projection and closed-form resolvents of the scalar
// sign inclusions used by the implicit twisting controller.

namespace cta {

/// Closed real interval [lo, hi]. Construction with lo > hi (or NaN bounds)
/// throws std::invalid_argument; bounds are never swapped silently.
class Interval {
 public:
  Interval(double lo, double hi);

  static Interval point(double v) { return Interval(v, v); }
  /// [-r, r]; r must be non-negative.
  static Interval symmetric(double r) { return Interval(-r, r); }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double width() const { return hi_ - lo_; }
  double midpoint() const { return 0.5 * (lo_ + hi_); }

  Interval negated() const { return Interval(-hi_, -lo_); }
  Interval scaled(double factor) const;  // factor >= 0

  bool contains(double x, double tol = 0.0) const {
    return x >= lo_ - tol && x <= hi_ + tol;
  }
  /// Distance from x to the interval (0 inside).
  double distance(double x) const;

  /// Minkowski sum.
  friend Interval operator+(const Interval& a, const Interval& b) {
    return Interval(a.lo_ + b.lo_, a.hi_ + b.hi_);
  }
  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lo_;
  double hi_;
};

/// Closest point of `set` to x.
double proj(const Interval& set, double x);

/// Set-valued signum: {-1}, [-1, 1] or {+1}.
Interval sgn_set(double x);

/// Single-valued selection of sgn with sgn(0) = 0.
double sign_selection(double x);

/// |x|^p * sign_selection(x); zero at the origin for any p > 0.
double signed_power(double x, double p);

/// Solves x in F*sgn(y - x) for x, i.e. x = proj([-F, F], y). F >= 0.
double solve_sgnsat(double gain, double y);

/// Solution set of y in [-A, A] + B*sgn(x - y), requires A > B > 0.
Interval solve_interval_sgn(double a, double b, double x);

/// proj([proj(-C, y), proj(C, y)], x) for a cone C = [A - B, A + B].
///
/// Requires C.lo + C.hi >= 0 (i.e. A >= 0), which keeps the inner bounds
/// ordered even when B > A. This is the form both controller stages call;
/// its inclusion guarantee is only established for A > B > 0.
double nested_projection(const Interval& cone, double x, double y);

/// Solves z in A*sgn(x - z) + B*sgn(y - z) for z. Requires A > 0, B >= 0.
double solve_two_sgn(double a, double b, double x, double y);

}  // namespace cta
