#pragma once

// Shared set text format:
//   - first nonblank line: "dim m"
//   - each later nonblank line: exactly m characters from {0,1},
//     character i = coordinate i (e_1 = "10...0")
//   - '#' starts a comment; duplicate vector lines are an error

#include <iosfwd>
#include <string>

#include "f2lab/gf2.hpp"

namespace f2lab {

GF2Set read_set(std::istream& in);           // throws Err::Parse
GF2Set read_set_file(const std::string& path);
void write_set(std::ostream& out, const GF2Set& a);
void write_set_file(const std::string& path, const GF2Set& a);

}  // namespace f2lab
