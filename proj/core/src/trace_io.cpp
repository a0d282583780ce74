#include "cta/trace_io.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace cta {

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto res =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

double parse_double(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return v;
}

void write_trace_csv(std::ostream& os, const SimTrace& trace) {
  os << kTraceHeader << '\n';
  std::string line;
  for (const TraceRecord& r : trace.records) {
    line.clear();
    for (double v : {r.t, r.z1, r.z2, r.z3, r.x1, r.x2, r.x3, r.u, r.u1, r.eta, r.delta}) {
      if (!line.empty()) line += ',';
      line += format_double(v);
    }
    os << line << '\n';
  }
}

SimTrace read_trace_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) {
    throw std::runtime_error("trace csv: missing header");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kTraceHeader) {
    throw std::runtime_error("trace csv: unexpected header '" + line + "'");
  }

  SimTrace trace;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::array<double, 11> f{};
    std::size_t n = 0;
    std::string_view rest(line);
    try {
      while (true) {
        const auto comma = rest.find(',');
        if (n == f.size()) throw std::invalid_argument("too many fields");
        f[n++] = parse_double(rest.substr(0, comma));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
      }
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("trace csv line " + std::to_string(lineno) + ": " + e.what());
    }
    if (n != f.size()) {
      throw std::runtime_error("trace csv line " + std::to_string(lineno) +
                               ": expected 11 fields");
    }
    trace.records.push_back(
        TraceRecord{f[0], f[1], f[2], f[3], f[4], f[5], f[6], f[7], f[8], f[9], f[10]});
  }
  if (trace.records.size() >= 2) {
    trace.h = trace.records[1].t - trace.records[0].t;
  }
  return trace;
}

}  // namespace cta
