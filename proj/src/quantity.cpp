#include "splitric/quantity.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <unordered_map>

namespace splitric {

namespace {

struct UnitDef {
  Dimension dim;
  double factor;
};

const std::unordered_map<std::string, UnitDef>& unit_table() {
  static const std::unordered_map<std::string, UnitDef> table = {
      // data volume (decimal SI; bytes are 8 bits)
      {"bit", {Dimension::Bits, 1.0}},
      {"b", {Dimension::Bits, 1.0}},
      {"kbit", {Dimension::Bits, 1e3}},
      {"Mbit", {Dimension::Bits, 1e6}},
      {"Gbit", {Dimension::Bits, 1e9}},
      {"B", {Dimension::Bits, 8.0}},
      {"kB", {Dimension::Bits, 8e3}},
      {"MB", {Dimension::Bits, 8e6}},
      {"GB", {Dimension::Bits, 8e9}},
      // data rate
      {"bit/s", {Dimension::BitsPerSecond, 1.0}},
      {"kbit/s", {Dimension::BitsPerSecond, 1e3}},
      {"Mbit/s", {Dimension::BitsPerSecond, 1e6}},
      {"Gbit/s", {Dimension::BitsPerSecond, 1e9}},
      // time
      {"s", {Dimension::Seconds, 1.0}},
      {"ms", {Dimension::Seconds, 1e-3}},
      {"min", {Dimension::Seconds, 60.0}},
      {"h", {Dimension::Seconds, 3600.0}},
      // compute
      {"FLOP", {Dimension::Flop, 1.0}},
      {"MFLOP", {Dimension::Flop, 1e6}},
      {"GFLOP", {Dimension::Flop, 1e9}},
      {"TFLOP", {Dimension::Flop, 1e12}},
      {"PFLOP", {Dimension::Flop, 1e15}},
      {"FLOPS", {Dimension::FlopPerSecond, 1.0}},
      {"FLOP/s", {Dimension::FlopPerSecond, 1.0}},
      {"MFLOPS", {Dimension::FlopPerSecond, 1e6}},
      {"GFLOPS", {Dimension::FlopPerSecond, 1e9}},
      {"TFLOPS", {Dimension::FlopPerSecond, 1e12}},
      {"PFLOPS", {Dimension::FlopPerSecond, 1e15}},
      // energy and power
      {"J", {Dimension::Joules, 1.0}},
      {"kJ", {Dimension::Joules, 1e3}},
      {"W", {Dimension::Watts, 1.0}},
      {"kW", {Dimension::Watts, 1e3}},
      {"J/FLOP", {Dimension::JoulesPerFlop, 1.0}},
      {"pJ/FLOP", {Dimension::JoulesPerFlop, 1e-12}},
      // frequency
      {"Hz", {Dimension::Hertz, 1.0}},
      {"MHz", {Dimension::Hertz, 1e6}},
      {"GHz", {Dimension::Hertz, 1e9}},
  };
  return table;
}

[[noreturn]] void parse_fail(std::string_view text, const std::string& what) {
  throw std::invalid_argument("quantity parse error: " + what + " in \"" +
                              std::string(text) + "\"");
}

}  // namespace

const char* unit_symbol(Dimension dim) {
  switch (dim) {
    case Dimension::Bits: return "bit";
    case Dimension::BitsPerSecond: return "bit/s";
    case Dimension::Seconds: return "s";
    case Dimension::Joules: return "J";
    case Dimension::Watts: return "W";
    case Dimension::Flop: return "FLOP";
    case Dimension::FlopPerSecond: return "FLOP/s";
    case Dimension::JoulesPerFlop: return "J/FLOP";
    case Dimension::Hertz: return "Hz";
    case Dimension::Scalar: return "";
  }
  return "";
}

Quantity parse_quantity(std::string_view text) {
  size_t begin = text.find_first_not_of(" \t");
  size_t end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos) parse_fail(text, "empty input");
  std::string trimmed(text.substr(begin, end - begin + 1));

  const char* cstr = trimmed.c_str();
  char* num_end = nullptr;
  double value = std::strtod(cstr, &num_end);
  if (num_end == cstr) parse_fail(text, "missing number");
  if (!std::isfinite(value)) parse_fail(text, "non-finite value");
  if (value < 0.0) parse_fail(text, "negative value");

  std::string unit(num_end);
  size_t u = unit.find_first_not_of(" \t");
  unit = (u == std::string::npos) ? std::string() : unit.substr(u);

  if (unit.empty()) return Quantity{value, Dimension::Scalar};

  auto it = unit_table().find(unit);
  if (it == unit_table().end()) parse_fail(text, "unknown unit '" + unit + "'");
  return Quantity{value * it->second.factor, it->second.dim};
}

std::string format_quantity(const Quantity& q) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", q.value);
  std::string out(buf);
  const char* sym = unit_symbol(q.dim);
  if (sym[0] != '\0') {
    out += ' ';
    out += sym;
  }
  return out;
}

}  // namespace splitric
