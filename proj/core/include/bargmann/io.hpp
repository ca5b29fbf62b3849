// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The bargmann Authors

// Lossless text formats for signals (.sig) and fields (.grid), and CSV
// output.
//
//   .sig   NBSIG 1 <N> <dt>                     then N lines "<re> <im>"
//   .grid  NBGRID 1 <Nx> <Ny> <dx> <dy> <kind>  then Nx*Ny lines "<re> <im>",
//          x index outer, both ascending from the most negative index.
//
// Numbers are written with 17 significant digits.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bargmann/signal.hpp"

namespace bargmann {

/// Shortest-safe decimal form of a double (17 significant digits).
std::string format_double(double value);

void write_signal(std::ostream& os, const Signal& signal);
void write_field(std::ostream& os, const Field& field);
/// Throws IoError on malformed input.
Signal read_signal(std::istream& is);
Field read_field(std::istream& is);

/// File variants; throw IoError when the file cannot be opened or written.
void save_signal(const std::string& path, const Signal& signal);
void save_field(const std::string& path, const Field& field);
Signal load_signal(const std::string& path);
Field load_field(const std::string& path);

/// Writes a comma-separated row followed by LF.
void write_csv_row(std::ostream& os, const std::vector<std::string>& cells);

}  // namespace bargmann
