// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cta/experiment.hpp"
#include "cta/resolvent.hpp"
#include "cta/trace_io.hpp"
#include "oracles.hpp"

namespace {

constexpr double kH = 1e-3;
constexpr double kScale = 5.0;
const cta::Window kSteady{8.0, 10.0};

int g_failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("[%s] AC%d %s: %s\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  if (!ok) ++g_failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool within_factor_two(double measured, double expected) {
  const double r = measured / expected;
  return r >= 0.5 && r <= 2.0;
}

void lemma_solver_soundness() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int bad_inclusion = 0, bad_grid = 0;
  double worst_grid = 0.0;
  constexpr int kSamples = 10000;
  for (int i = 0; i < kSamples; ++i) {
    const double a = 100.0 * (1.0 - unit(rng));       // (0, 100]
    const double b = a * (1.0 - unit(rng)) * 0.9999;  // (0, A)
    const double span = 2.0 * (a + b);
    const double x = span * (2.0 * unit(rng) - 1.0);
    const double y = span * (2.0 * unit(rng) - 1.0);
    const double z = cta::solve_two_sgn(a, b, x, y);
    if (!cta::oracle::two_sgn_holds(a, b, x, y, z, 1e-9)) ++bad_inclusion;
    const double g = cta::oracle::TwoSgnGrid(a, b, x, y, 1e-4).bisect();
    worst_grid = std::max(worst_grid, std::abs(g - z));
    if (std::abs(g - z) > 2e-4) ++bad_grid;
  }
  const double elapsed = seconds_since(t0);
  report(1, bad_inclusion == 0 && bad_grid == 0 && elapsed < 10.0, "two-sign resolvent soundness",
         fmt("%d samples, inclusion violations %d (eps 1e-9), grid mismatches %d (max |dz| %.3g, "
             "tol 2e-4), %.2f s (limit 10 s)",
             kSamples, bad_inclusion, bad_grid, worst_grid, elapsed));
}

struct Run {
  cta::SimTrace trace;
  cta::PrecisionReport precision;
  cta::ChatterReport chatter;
  double t_conv = 0.0;
  double elapsed = 0.0;
};

Run run_preset(const std::string& name) {
  const auto t0 = std::chrono::steady_clock::now();
  const cta::SimConfig cfg = cta::preset_config(name);
  Run r;
  r.trace = cta::run_simulation(cfg);
  r.elapsed = seconds_since(t0);
  r.precision = cta::precision_envelope(r.trace, kSteady, kH, cta::nominal_orders(cfg.method));
  r.chatter = cta::chatter_metrics(r.trace, kSteady);
  r.t_conv = cta::convergence_time(r.trace, cta::kDefaultConvergenceThreshold);
  return r;
}

std::string csv_of(const cta::SimTrace& t) {
  std::ostringstream os;
  cta::write_trace_csv(os, t);
  return os.str();
}

}  // namespace

int main() {
  lemma_solver_soundness();

  const Run ex = run_preset("paper-explicit");
  const Run im = run_preset("paper-implicit");

  {
    const auto& s = ex.precision.sup_abs_x;
    const double r1 = s[0] / (600 * std::pow(kH, 3));
    const double r2 = s[1] / (610 * std::pow(kH, 2));
    const double r3 = s[2] / (80 * kH);
    const bool conv_ok = std::abs(ex.t_conv - 2.5) <= 0.5;
    const bool prec_ok = within_factor_two(s[0], 600 * std::pow(kH, 3)) &&
                         within_factor_two(s[1], 610 * std::pow(kH, 2)) &&
                         within_factor_two(s[2], 80 * kH);
    report(2, conv_ok && prec_ok && ex.elapsed < 1.0, "explicit baseline reproduction",
           fmt("convergence_time(0.01) = %.4g s (need 2.5 +- 0.5) [%s]; sup|x|/v h^p = "
               "%.3g, %.3g, %.3g (need [0.5, 2]) [%s]; run %.3f s",
               ex.t_conv, conv_ok ? "ok" : "out of range", r1, r2, r3, prec_ok ? "ok" : "out of range",
               ex.elapsed));
  }

  {
    const auto& s = im.precision.sup_abs_x;
    const double b1 = 2 * 500 * std::pow(kH, 4);
    const double b2 = 2 * 1.5 * std::pow(kH, 3);
    const double b3 = 2 * 1.5 * std::pow(kH, 2);
    const bool conv_ok = std::abs(im.t_conv - 2.5) <= 0.5 && std::abs(im.t_conv - ex.t_conv) <= 0.5;
    const bool prec_ok = s[0] <= b1 && s[1] <= b2 && s[2] <= b3;
    report(3, conv_ok && prec_ok, "implicit method reproduction",
           fmt("convergence_time(0.01) = %.4g s (need 2.5 +- 0.5, explicit %.4g) [%s]; "
               "sup|x1| = %.3g <= %.3g, sup|x2| = %.3g <= %.3g, sup|x3| = %.3g <= %.3g [%s]",
               im.t_conv, ex.t_conv, conv_ok ? "ok" : "out of range", s[0], b1, s[1], b2, s[2], b3,
               prec_ok ? "ok" : "exceeded"));
  }

  {
    const double tv_e = ex.chatter.total_variation_u;
    const double tv_i = im.chatter.total_variation_u;
    report(4, tv_i < tv_e / 10.0, "chattering suppression",
           fmt("TV(u) on [8,10]: implicit %.4g, explicit %.4g, ratio %.3g (need < 0.1); sign flips "
               "%zu vs %zu",
               tv_i, tv_e, tv_i / tv_e, im.chatter.sign_flips, ex.chatter.sign_flips));
  }

  {
    double sup = 0.0;
    for (const auto& r : im.trace.records) {
      if (r.t >= kSteady.start - cta::kWindowTolerance && r.t <= kSteady.end + cta::kWindowTolerance) {
        sup = std::max(sup, std::abs(r.z3));
      }
    }
    const double bound = 3e-6 * kScale;
    report(5, sup <= bound, "disturbance tracking",
           fmt("sup |eta + delta| on [8,10] = %.3g (bound %.3g)", sup, bound));
  }

  {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<double> hs{1e-3, 5e-4, 2e-4, 1e-4};
    bool ok = true;
    std::string detail;
    for (auto method : {cta::Method::kExplicit, cta::Method::kImplicit}) {
      cta::SweepSpec spec;
      spec.base = cta::preset_config(method == cta::Method::kExplicit ? "paper-explicit"
                                                                      : "paper-implicit");
      spec.h_values = hs;
      spec.window = kSteady;
      spec.orders = cta::nominal_orders(method);
      const auto table = cta::run_sweep(spec);
      const auto expected = cta::nominal_orders(method);
      detail += std::string(cta::to_string(method)) + " slopes (";
      for (std::size_t i = 0; i < 3; ++i) {
        const auto& s = table.slopes[i];
        const bool hit = s && std::abs(*s - expected[i]) <= 0.7;
        ok = ok && hit;
        detail += (s ? fmt("%.2f", *s) : std::string("n/a")) + (hit ? "" : "!") + (i < 2 ? ", " : "");
      }
      detail += fmt(") vs (%g, %g, %g); ", expected[0], expected[1], expected[2]);
    }
    const double elapsed = seconds_since(t0);
    ok = ok && elapsed < 30.0;
    report(6, ok, "order sweep", detail + fmt("tol +-0.7, %.2f s (limit 30 s)", elapsed));
  }

  {
    bool all_zero = true;
    for (auto method : {cta::Method::kExplicit, cta::Method::kImplicit}) {
      cta::SimConfig cfg = cta::preset_config("zero");
      cfg.method = method;
      for (const auto& r : cta::run_simulation(cfg).records) {
        all_zero = all_zero && r.z1 == 0 && r.z2 == 0 && r.z3 == 0 && r.x1 == 0 && r.x2 == 0 &&
                   r.x3 == 0 && r.u == 0 && r.u1 == 0 && r.eta == 0 && r.delta == 0;
      }
    }
    report(7, all_zero, "trivial equilibria", all_zero ? "both methods identically zero"
                                                         : "nonzero entry found");
  }

  {
    bool identical = true;
    std::string names;
    for (const auto& p : cta::presets()) {
      const std::string a = csv_of(cta::run_simulation(p.cfg));
      const std::string b = csv_of(cta::run_simulation(p.cfg));
      identical = identical && a == b;
      names += p.name + " ";
    }
    report(8, identical, "determinism", "byte-identical CSV for presets: " + names);
  }

  std::printf("%s: %d criterion(s) failed\n", g_failures ? "FAILED" : "OK", g_failures);
  return g_failures == 0 ? 0 : 1;
}
