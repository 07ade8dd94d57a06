#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lamanenum/geometry.hpp"

namespace laman {

// Instance file format (whitespace separated, '#' starts a comment):
//   n
//   x_1 y_1
//   ...
//   x_n y_n
//   m
//   u_1 v_1
//   ...
//   u_m v_m
// Coordinates are decimal literals; vertex ids are 1..n in input order.
struct Instance {
  PointSet points;
  std::vector<Edge> constraints;
};

// Throws ParseError (2) for malformed input, GenericityError (3) for
// coincident points or collinear triples, ConstraintError (4) for out-of-range,
// duplicate, crossing, or dependent constraints.
Instance parse_instance(std::istream& in);
Instance parse_instance_file(const std::string& path);

// Text of one output record: "L <k>: (u1,v1)(u2,v2)...".
std::string format_record(std::uint64_t index, const std::vector<Edge>& edges);
// JSON line: {"index":k,"edges":[[u,v],...]}.
std::string format_record_json(std::uint64_t index, const std::vector<Edge>& edges);

}  // namespace laman
