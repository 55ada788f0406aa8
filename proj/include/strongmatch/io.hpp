#pragma once

// Flat-file formats.
//
// Point file: one point per line, "x y" with a single space, '#' comments
// and blank lines allowed; the point's index is its line order.  Numbers are
// written with 17 significant digits so parse -> serialize round-trips
// byte-identically.
//
// Matching file: one pair per line, "i j kind params...":
//   i j disk cx cy r
//   i j tri A B C down|up
//   i j square x0 y0 s

#include <stdexcept>
#include <string>
#include <vector>

#include "strongmatch/matching.hpp"

namespace strongmatch {

struct ParseError : std::runtime_error {
    int line;
    ParseError(const std::string& msg, int line_no)
        : std::runtime_error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
};

std::string format_double(double v);

std::string points_to_string(const std::vector<Point>& pts);
std::vector<Point> parse_points(const std::string& text);
std::vector<Pt<ExactReal>> parse_points_exact(const std::string& text);

std::string matching_to_string(const StrongMatching<double>& m);
StrongMatching<double> parse_matching(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace strongmatch
