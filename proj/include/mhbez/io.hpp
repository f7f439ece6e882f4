#pragma once

#include <iosfwd>
#include <string>

#include "mhbez/core.hpp"
#include "mhbez/gadgets.hpp"

namespace mhbez {

// Support file:  line 1 "n m", then m lines of n non-negative integers.
// Graph file:    line 1 "m e", then e lines "u v" with 1 <= u < v <= m.
// Blank lines are ignored. ParseError::position() is the 1-based line.

Support read_support(std::istream& in);
Support read_support_file(const std::string& path);
/// Monomials in lexicographic order.
void write_support(std::ostream& out, const Support& support);

Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

}  // namespace mhbez
