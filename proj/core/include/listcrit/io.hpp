#pragma once

#include "listcrit/graph.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace listcrit {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Edge-list format shared by every tool:
//   optional `#` comment lines anywhere;
//   first data line `n m`;
//   then m lines `u v` with 0 <= u < v < n, whitespace separated.
// Duplicate edges, loops, and out-of-range or misordered endpoints are
// rejected with a line-numbered ParseError.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

// List-size assignment: lines `v f(v)`, one per vertex, `#` comments allowed.
// Every vertex of the target graph must be covered exactly once; f(v) >= 0.
std::vector<int> read_list_sizes(std::istream& in, int n);
std::vector<int> read_list_sizes_file(const std::string& path, int n);

}  // namespace listcrit
