#pragma once

#include <iosfwd>
#include <string>

#include "l2greedy/point.hpp"

namespace l2g {

/// One point per line, coordinates separated by tabs. Exact coordinates are
/// written as p/q, doubles with 17 significant digits.
void write_sequence(std::ostream& out, const PointList& pts);
std::string format_sequence(const PointList& pts);

/// Reads the format above. Blank lines and lines starting with '#' are skipped;
/// coordinates may be separated by any whitespace or commas. Every coordinate is
/// parsed exactly ("0.3" is 3/10). Throws ParseError on malformed input,
/// inconsistent dimensions or values outside [0,1].
PointList read_sequence(std::istream& in);
PointList read_sequence_file(const std::string& path);

}  // namespace l2g
