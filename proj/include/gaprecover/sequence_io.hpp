#pragma once

// Text formats shared by the CLI and the Python bindings.
//
// Sequence CSV: header `t,re,im`, one row per stored sample, indices strictly
// increasing. Indices skipped inside the range are read back as zeros.
// Doubles are written with 17 significant digits so that a write/read cycle
// is bit-exact.

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "gaprecover/sequence.hpp"

namespace gaprecover {

/// Throws CsvError carrying the offending row number.
FiniteSequence read_sequence_csv(std::istream& in);
FiniteSequence read_sequence_csv_file(const std::string& path);

void write_sequence_csv(std::ostream& out, const FiniteSequence& x);
void write_sequence_csv_file(const std::string& path, const FiniteSequence& x);

/// Writes the rows `t,re,im` for values[p] at start + p.
void write_values_csv(std::ostream& out, Index start, std::span<const Complex> values);

/// 17-significant-digit decimal, exact on re-read.
std::string format_double(double v);

/// Parses an angle given in radians ("1.5") or as a multiple of pi
/// ("0.1pi", "pi", "-0.5pi", "0.25*pi"). Throws InvalidArgument.
double parse_angle(std::string_view text);

}  // namespace gaprecover
