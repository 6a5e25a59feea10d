#pragma once

#include <iosfwd>
#include <string>

#include "ooc/model.hpp"

namespace ooc {

// Code files: header line
//   ooc m=<int> n=<int> k=<int> lambda=<int> hole=<int> regular=<int>
// then one codeword per line, points as "row,col" separated by single
// spaces, points sorted, lines sorted lexicographically. '#' starts a
// comment. LF endings. Export -> parse -> export is byte-identical.
std::string export_code(const OocCode& code);
OocCode parse_code(const std::string& text);

// Design files: header
//   design kind=<token> modulus=<int> type=<g^u tokens> hole_rows=<int> ...
// with kind-specific extras (rows=, w=, h=, blocks=), then base blocks in
// the same line format.
std::string export_design(const DesignObject& d);
DesignObject parse_design(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

std::string format_provenance(const Provenance& p, int indent = 0);

}  // namespace ooc
