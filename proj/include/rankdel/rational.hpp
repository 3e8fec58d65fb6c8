#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdio>
#include <string>

namespace rankdel {

/// Exact rational arithmetic. Voting weights, metric averages and axiom
/// verdicts never touch floating point; doubles appear only when rendering.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Renders a rational as a decimal with 6 significant digits (CSV output).
inline std::string to_decimal(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", to_double(r));
  return buf;
}

}  // namespace rankdel
