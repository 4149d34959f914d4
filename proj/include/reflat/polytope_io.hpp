#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "reflat/polytope.hpp"

namespace reflat {

/// Reads "v d" followed by v rows of d integers. Throws ParseError.
std::vector<IntPoint> read_points(std::istream &in);
Polytope read_polytope(std::istream &in);
Polytope parse_polytope(const std::string &text);

/// Writes "v d" and the points as rows.
void write_points(std::ostream &out, const std::vector<IntPoint> &pts, int dim);
void write_polytope(std::ostream &out, const Polytope &P);

} // namespace reflat
