#include "cta/experiment.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <future>
#include <istream>
#include <ostream>

#include "cta/trace_io.hpp"
#include "json.hpp"

namespace cta {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double number(std::string_view key, std::string_view value) {
  try {
    return parse_double(trim(value));
  } catch (const std::invalid_argument&) {
    throw UsageError("bad value for '" + std::string(key) + "': '" + std::string(value) + "'");
  }
}

template <typename Fn>
auto usage_guard(Fn&& fn) {
  try {
    return fn();
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

SimConfig reference_config(Method method) {
  SimConfig cfg;
  cfg.h = 1e-3;
  cfg.t_final = 10.0;
  cfg.method = method;
  cfg.gains = Gains(160.236, 60.3738, 28.5, 15.0, 5.0);
  cfg.z1_0 = 8.0;
  cfg.z2_0 = -12.0;
  cfg.eta_0 = 0.0;
  cfg.disturbance = Disturbance::reference();
  return cfg;
}

Disturbance parse_terms(std::string_view text, double constant) {
  Disturbance d;
  d.constant = constant;
  while (!trim(text).empty()) {
    const auto semi = text.find(';');
    const std::string_view item = trim(text.substr(0, semi));
    text = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
    if (item.empty()) continue;

    std::vector<std::string_view> parts;
    std::string_view rest = item;
    while (!rest.empty()) {
      const auto sp = rest.find_first_of(" \t");
      parts.push_back(rest.substr(0, sp));
      rest = sp == std::string_view::npos ? std::string_view{} : trim(rest.substr(sp));
    }
    if (parts.size() != 3 || (parts[1] != "sin" && parts[1] != "cos")) {
      throw UsageError("disturbance term must be 'amplitude sin|cos frequency', got '" +
                       std::string(item) + "'");
    }
    d.terms.push_back(Sinusoid{number("disturbance.terms", parts[0]),
                               number("disturbance.terms", parts[2]),
                               parts[1] == "sin" ? Sinusoid::Shape::kSin
                                                 : Sinusoid::Shape::kCos});
  }
  return d;
}

void set_gain(SimConfig& cfg, int index, double v) {
  const Gains& g = cfg.gains;
  std::array<double, 4> k{g.kp1(), g.kp2(), g.kp3(), g.kp4()};
  k[static_cast<std::size_t>(index)] = v;
  cfg.gains = usage_guard([&] { return Gains(k[0], k[1], k[2], k[3], g.scale()); });
}

}  // namespace

const std::vector<ExperimentPreset>& presets() {
  static const std::vector<ExperimentPreset> all = [] {
    SimConfig zero;
    zero.h = 1e-3;
    zero.t_final = 10.0;
    zero.method = Method::kImplicit;
    return std::vector<ExperimentPreset>{
        {"paper-explicit", reference_config(Method::kExplicit)},
        {"paper-implicit", reference_config(Method::kImplicit)},
        {"zero", zero},
    };
  }();
  return all;
}

SimConfig preset_config(std::string_view name) {
  for (const auto& p : presets()) {
    if (p.name == name) return p.cfg;
  }
  std::string known;
  for (const auto& p : presets()) known += (known.empty() ? "" : ", ") + p.name;
  throw UsageError("unknown preset '" + std::string(name) + "' (known: " + known + ")");
}

std::vector<double> parse_number_list(std::string_view text, std::size_t expected) {
  std::vector<double> out;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    out.push_back(number("list", rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (expected != 0 && out.size() != expected) {
    throw UsageError("expected " + std::to_string(expected) + " comma-separated values, got '" +
                     std::string(text) + "'");
  }
  return out;
}

void apply_override(SimConfig& cfg, std::string_view key_in, std::string_view value_in) {
  const std::string_view key = trim(key_in);
  const std::string_view value = trim(value_in);

  if (key == "method") {
    cfg.method = usage_guard([&] { return parse_method(value); });
  } else if (key == "h") {
    cfg.h = number(key, value);
  } else if (key == "t_final") {
    cfg.t_final = number(key, value);
  } else if (key == "gains") {
    const auto k = parse_number_list(value, 4);
    cfg.gains = usage_guard([&] { return Gains(k[0], k[1], k[2], k[3], cfg.gains.scale()); });
  } else if (key == "kp1" || key == "kp2" || key == "kp3" || key == "kp4") {
    set_gain(cfg, key[2] - '1', number(key, value));
  } else if (key == "scale" || key == "L") {
    const double l = number(key, value);
    const Gains& g = cfg.gains;
    cfg.gains = usage_guard([&] { return Gains(g.kp1(), g.kp2(), g.kp3(), g.kp4(), l); });
  } else if (key == "init") {
    const auto v = parse_number_list(value, 3);
    cfg.z1_0 = v[0];
    cfg.z2_0 = v[1];
    cfg.eta_0 = v[2];
  } else if (key == "z1_0") {
    cfg.z1_0 = number(key, value);
  } else if (key == "z2_0") {
    cfg.z2_0 = number(key, value);
  } else if (key == "eta_0") {
    cfg.eta_0 = number(key, value);
  } else if (key == "plant") {
    cfg.plant = usage_guard([&] { return parse_plant_scheme(value); });
  } else if (key == "disturbance_estimate") {
    cfg.estimate = usage_guard([&] { return parse_disturbance_estimate(value); });
  } else if (key == "disturbance") {
    if (value == "reference") {
      cfg.disturbance = Disturbance::reference();
    } else if (value == "zero") {
      cfg.disturbance = Disturbance{};
    } else {
      throw UsageError("disturbance must be 'reference' or 'zero'");
    }
  } else if (key == "disturbance.constant") {
    cfg.disturbance.constant = number(key, value);
  } else if (key == "disturbance.terms") {
    cfg.disturbance = parse_terms(value, cfg.disturbance.constant);
  } else {
    throw UsageError("unknown config key '" + std::string(key) + "'");
  }
}

void apply_overrides(SimConfig& cfg, const KeyValues& kv) {
  for (const auto& [k, v] : kv) apply_override(cfg, k, v);
}

KeyValues parse_config(std::istream& is) {
  KeyValues out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw UsageError("config line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    const auto key = trim(view.substr(0, eq));
    if (key.empty()) {
      throw UsageError("config line " + std::to_string(lineno) + ": empty key");
    }
    out.emplace_back(std::string(key), std::string(trim(view.substr(eq + 1))));
  }
  return out;
}

Window fit_window(Window window, double t_final) {
  if (t_final < window.end) {
    const double len = window.end - window.start;
    window.end = t_final;
    window.start = std::max(0.0, t_final - len);
  }
  return window;
}

RunSummary summarize(const SimConfig& cfg, const SimTrace& trace, double threshold,
                     Window window) {
  window = fit_window(window, cfg.t_final);
  RunSummary s;
  s.method = std::string(to_string(cfg.method));
  s.h = cfg.h;
  s.t_final = cfg.t_final;
  s.threshold = threshold;
  s.convergence_time_s = convergence_time(trace, threshold);
  s.precision = precision_envelope(trace, window, cfg.h, nominal_orders(cfg.method));
  s.chatter = chatter_metrics(trace, window);
  return s;
}

std::string summary_json(const RunSummary& s) {
  nlohmann::ordered_json j;
  j["method"] = s.method;
  j["h"] = s.h;
  j["t_final"] = s.t_final;
  j["threshold"] = s.threshold;
  if (std::isfinite(s.convergence_time_s)) {
    j["convergence_time_s"] = s.convergence_time_s;
  } else {
    j["convergence_time_s"] = nullptr;
  }
  j["window"] = {s.precision.window.start, s.precision.window.end};
  j["sup_abs_x"] = s.precision.sup_abs_x;
  j["v_constants"] = s.precision.v_constants;
  j["tv_u"] = s.chatter.total_variation_u;
  j["sign_flips"] = s.chatter.sign_flips;
  return j.dump(2);
}

std::optional<double> fit_loglog_slope(const std::vector<double>& x,
                                       const std::vector<double>& y) {
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    if (x[i] > 0.0 && y[i] > 0.0 && std::isfinite(y[i])) {
      pts.emplace_back(std::log(x[i]), std::log(y[i]));
    }
  }
  if (pts.size() < 2) return std::nullopt;
  double mx = 0.0, my = 0.0;
  for (const auto& [a, b] : pts) {
    mx += a;
    my += b;
  }
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());
  double sxy = 0.0, sxx = 0.0;
  for (const auto& [a, b] : pts) {
    sxy += (a - mx) * (b - my);
    sxx += (a - mx) * (a - mx);
  }
  if (sxx == 0.0) return std::nullopt;
  return sxy / sxx;
}

SweepTable run_sweep(const SweepSpec& spec) {
  if (spec.h_values.size() < 3) {
    throw UsageError("sweep needs at least three step sizes");
  }
  for (double h : spec.h_values) {
    if (!(h > 0.0)) throw UsageError("sweep step sizes must be positive");
  }

  std::vector<std::future<SweepRow>> jobs;
  jobs.reserve(spec.h_values.size());
  for (double h : spec.h_values) {
    jobs.push_back(std::async(std::launch::async, [&spec, h] {
      SimConfig cfg = spec.base;
      cfg.h = h;
      SweepRow row;
      row.h = h;
      try {
        const SimTrace trace = run_simulation(cfg);
        row.sup_abs_x = precision_envelope(trace, fit_window(spec.window, cfg.t_final), h, spec.orders).sup_abs_x;
      } catch (const DivergenceError&) {
        row.diverged = true;
      }
      return row;
    }));
  }

  SweepTable table;
  for (auto& job : jobs) table.rows.push_back(job.get());

  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<double> hs, ys;
    for (const SweepRow& r : table.rows) {
      if (r.diverged) continue;
      hs.push_back(r.h);
      ys.push_back(r.sup_abs_x[i]);
    }
    table.slopes[i] = fit_loglog_slope(hs, ys);
  }
  return table;
}

void write_sweep_csv(std::ostream& os, const SweepTable& table) {
  os << "kind,h,sup_abs_x1,sup_abs_x2,sup_abs_x3\n";
  for (const SweepRow& r : table.rows) {
    os << (r.diverged ? "diverged" : "run") << ',' << format_double(r.h);
    for (double v : r.sup_abs_x) os << ',' << (r.diverged ? "" : format_double(v));
    os << '\n';
  }
  os << "slope,";
  for (const auto& s : table.slopes) os << ',' << (s ? format_double(*s) : "");
  os << '\n';
}

}  // namespace cta
