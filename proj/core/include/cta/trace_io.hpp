#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "cta/plant.hpp"

namespace cta {

inline constexpr std::string_view kTraceHeader = "t,z1,z2,z3,x1,x2,x3,u,u1,eta,delta";

/// 17 significant digits; parses back to the same double.
std::string format_double(double v);

/// Strict parse of the whole string; throws std::invalid_argument.
double parse_double(std::string_view text);

void write_trace_csv(std::ostream& os, const SimTrace& trace);

/// Reads a trace written by write_trace_csv. h is recovered from the first two
/// rows; scale is left at 1. Throws std::runtime_error on malformed input.
SimTrace read_trace_csv(std::istream& is);

}  // namespace cta
