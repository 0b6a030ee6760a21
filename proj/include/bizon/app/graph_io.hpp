#pragma once

#include "bizon/multigraph.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace bizon::app {

/// Malformed graph file or family specification.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Reads the text format
///   # comment
///   p <n> <m>
///   e <u> <v>      (1-indexed; u = v is a loop; repeat a line for multiplicity)
/// The header must precede all edge lines and m must equal their number.
MultiGraph parse_graph(std::istream& in);
MultiGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const MultiGraph& g);

/// "complete:5", "loops:3", "cycle:6", "path:4", "petersen".
MultiGraph parse_family_spec(const std::string& spec);

} // namespace bizon::app
