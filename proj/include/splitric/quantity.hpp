#pragma once

#include <string>
#include <string_view>

namespace splitric {

/// Canonical dimensions used throughout the model. All values are stored in
/// base SI units: bits, bit/s, seconds, joules, watts, FLOP, FLOP/s, J/FLOP, Hz.
enum class Dimension {
  Bits,
  BitsPerSecond,
  Seconds,
  Joules,
  Watts,
  Flop,
  FlopPerSecond,
  JoulesPerFlop,
  Hertz,
  Scalar,
};

struct Quantity {
  double value = 0.0;
  Dimension dim = Dimension::Scalar;
};

/// Canonical unit symbol for a dimension ("bit", "bit/s", "s", ...).
const char* unit_symbol(Dimension dim);

/// Parses "<number> <unit>" into a canonical-unit Quantity.
///
/// Accepted units: b, B, kB, MB, GB, bit, kbit, Mbit, Gbit, bit/s, kbit/s,
/// Mbit/s, Gbit/s, FLOP, MFLOP, GFLOP, TFLOP, PFLOP, FLOPS, GFLOPS, TFLOPS,
/// PFLOPS, FLOP/s, pJ/FLOP, J/FLOP, J, W, s, ms, min, h, Hz, MHz, GHz.
/// Byte units use decimal SI prefixes (1 kB = 8000 bits). A bare number is a
/// dimensionless Scalar.
///
/// Throws std::invalid_argument naming the offending token on unknown units,
/// negative or non-finite values, or malformed input.
Quantity parse_quantity(std::string_view text);

/// Formats a Quantity as "<value> <canonical unit>" such that
/// parse_quantity(format_quantity(q)) == q to at least 12 significant digits.
std::string format_quantity(const Quantity& q);

}  // namespace splitric
