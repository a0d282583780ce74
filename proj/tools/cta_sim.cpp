// cta_sim: run continuous-twisting closed-loop experiments and step-size sweeps.
//
//   cta_sim simulate --preset paper-implicit --out trace.csv --summary summary.json
//   cta_sim sweep --preset paper-explicit --h-list 1e-3,5e-4,2e-4 --out sweep.csv

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cta/experiment.hpp"
#include "cta/trace_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDivergence = 2;

struct CommonOptions {
  std::string preset;
  std::string config_path;
  std::vector<std::string> sets;
  std::optional<std::string> method;
  std::optional<std::string> plant;
  std::optional<std::string> estimate;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--preset", o.preset, "Experiment preset (paper-explicit, paper-implicit, zero)")
      ->required();
  cmd->add_option("--config", o.config_path, "key = value configuration file")
      ->check(CLI::ExistingFile);
  cmd->add_option("--set", o.sets, "Override a config key (key=value), repeatable");
  cmd->add_option("--method", o.method, "explicit|implicit");
  cmd->add_option("--plant", o.plant, "Plant discretization: forward|symplectic");
  cmd->add_option("--disturbance-estimate", o.estimate, "Stage II z3 estimate: none|one-step");
}

cta::SimConfig build_config(const CommonOptions& o) {
  cta::SimConfig cfg = cta::preset_config(o.preset);
  if (!o.config_path.empty()) {
    std::ifstream in(o.config_path);
    if (!in) throw cta::UsageError("cannot read config file " + o.config_path);
    cta::apply_overrides(cfg, cta::parse_config(in));
  }
  for (const std::string& kv : o.sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw cta::UsageError("--set expects key=value, got " + kv);
    cta::apply_override(cfg, kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (o.method) cta::apply_override(cfg, "method", *o.method);
  if (o.plant) cta::apply_override(cfg, "plant", *o.plant);
  if (o.estimate) cta::apply_override(cfg, "disturbance_estimate", *o.estimate);
  return cfg;
}

template <typename Fn>
void write_file(const std::string& path, Fn&& fn) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw cta::UsageError("cannot open " + path + " for writing");
  fn(out);
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Continuous twisting algorithm: explicit vs implicit Euler simulator"};
  app.require_subcommand(1);
  // "--h" is the step size, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");

  CommonOptions sim_common;
  std::optional<double> h, t_final, threshold;
  std::optional<std::string> gains, init;
  std::string out_path, summary_path;
  auto* simulate = app.add_subcommand("simulate", "Run one closed-loop experiment");
  add_common(simulate, sim_common);
  simulate->add_option("--h", h, "Step size [s]");
  simulate->add_option("--t-final", t_final, "Final time [s]");
  simulate->add_option("--gains", gains, "kp1,kp2,kp3,kp4");
  simulate->add_option("--init", init, "z1,z2,eta");
  simulate->add_option("--out", out_path, "CSV trace output path");
  simulate->add_option("--summary", summary_path, "JSON summary path (stdout if omitted)");
  simulate->add_option("--threshold", threshold, "Convergence threshold on |z1|,|z2|");

  CommonOptions sweep_common;
  std::string h_list, sweep_out;
  auto* sweep = app.add_subcommand("sweep", "Step-size sweep with log-log order fit");
  add_common(sweep, sweep_common);
  sweep->add_option("--h-list", h_list, "Comma-separated step sizes (>= 3)")->required();
  sweep->add_option("--out", sweep_out, "CSV table output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*simulate) {
      cta::SimConfig cfg = build_config(sim_common);
      if (h) cfg.h = *h;
      if (t_final) cfg.t_final = *t_final;
      if (gains) cta::apply_override(cfg, "gains", *gains);
      if (init) cta::apply_override(cfg, "init", *init);
      const double thr = threshold.value_or(cta::kDefaultConvergenceThreshold);
      if (!(thr > 0.0)) throw cta::UsageError("--threshold must be positive");
      try {
        cfg.validate();
      } catch (const std::invalid_argument& e) {
        throw cta::UsageError(e.what());
      }

      const cta::SimTrace trace = cta::run_simulation(cfg);
      if (!out_path.empty()) {
        write_file(out_path, [&](std::ostream& os) { cta::write_trace_csv(os, trace); });
      }
      const std::string json = cta::summary_json(cta::summarize(cfg, trace, thr));
      if (summary_path.empty()) {
        std::cout << json << '\n';
      } else {
        write_file(summary_path, [&](std::ostream& os) { os << json << '\n'; });
      }
    } else if (*sweep) {
      cta::SweepSpec spec;
      spec.base = build_config(sweep_common);
      spec.h_values = cta::parse_number_list(h_list);
      spec.orders = cta::nominal_orders(spec.base.method);
      const cta::SweepTable table = cta::run_sweep(spec);
      if (!sweep_out.empty()) {
        write_file(sweep_out, [&](std::ostream& os) { cta::write_sweep_csv(os, table); });
      }
      cta::write_sweep_csv(std::cout, table);
    }
  } catch (const cta::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cta::DivergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDivergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
