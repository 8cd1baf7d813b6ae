#pragma once

// Line formats shared by every tool:
//
//   circulant <N> : <d1> <d2> ...      connection set (color-1 distances)
//   distance <N> : <hex>               complete coloring; hex digit i holds
//                                      bits 4i..4i+3, bit 4i in its LSB
//
// The parser also accepts the Mathematica form CirculantGraph[N, {d1, d2, ...}]
// (a trailing comma inside the braces is tolerated). Distances p > N/2 are
// read as N - p and repeated classes are merged.

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ramsey/coloring.hpp"

namespace ramsey {

std::string format_certificate(const Certificate& cert);
std::string format_distance(const DistanceColoring& c);
std::string to_hex(const BitMask& bits);
BitMask from_hex(std::string_view hex, std::size_t len);

// Parses a certificate line. `line_no` is used in ParseError positions.
Certificate parse_certificate(std::string_view line, int line_no = 1);
DistanceColoring parse_distance(std::string_view line, int line_no = 1);

using ColoringRecord = std::variant<Certificate, DistanceColoring>;

// Reads every non-blank, non-'#' line of a stream as a certificate or a
// distance coloring.
std::vector<ColoringRecord> read_records(std::istream& in);
std::vector<ColoringRecord> read_records_file(const std::string& path);

// Complete coloring of a record (certificates expanded).
DistanceColoring record_coloring(const ColoringRecord& r);

}  // namespace ramsey
