#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cohgeom/types.hpp"

namespace cohgeom::cli {

/// Parses "a", "bi", "a+bi", "a-bi", "i", "-i" (j is accepted for i).
/// Throws UsageError on anything else.
Complex parse_complex(std::string_view text);

/// Comma-separated lists; an empty string gives an empty list.
std::vector<Complex> parse_complex_list(std::string_view text);
std::vector<double> parse_real_list(std::string_view text);

/// Shortest decimal that round-trips, as in the JSON output.
std::string format_real(double x);

/// Replaces "--config path" with the flags stored in the JSON object at path.
/// Keys already given on the command line are skipped, so flags win over the
/// file. Arrays are joined with commas; true becomes a bare flag, false and
/// null are dropped.
std::vector<std::string> expand_config(std::vector<std::string> args);

}  // namespace cohgeom::cli
