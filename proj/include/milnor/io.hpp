#pragma once

// Text formats. Blank lines and '#' comments are ignored; parse errors carry
// the 1-based line number.
//
//   arrangement d=<int>           lines d=<int>                  plumbing
//   point: <i1> <i2> ...          line: <p>/<q> <p>/<q> <p>/<q>  v <id> e=<int> g=<int>
//                                                                e <id1> <id2> <+|->
//                                                                a <id> -> <vid>
//                                                                m <id> <int>

#include <string>
#include <vector>

#include "milnor/arrangement.hpp"
#include "milnor/boundary.hpp"
#include "milnor/plumbing.hpp"

namespace milnor {

/// Throws ParseError, or the validation error of the arrangement.
Arrangement parse_arrangement(const std::string& text);
std::string write_arrangement(const Arrangement& arr);

std::vector<RationalLine> parse_lines(const std::string& text);
std::string write_lines(const std::vector<RationalLine>& lines);

PlumbingGraph parse_plumbing(const std::string& text);
/// Canonical: vertices by id, edges in stored order, arrowheads, multiplicities by id.
std::string write_plumbing(const PlumbingGraph& g);

std::string write_config_graph(const ConfigGraph& cg);

/// The header word of the first non-comment line ("arrangement", "lines", "plumbing").
std::string detect_format(const std::string& text);

/// Throws ParseError when the file cannot be read or written.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace milnor
