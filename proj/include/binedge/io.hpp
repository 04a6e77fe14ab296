#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "binedge/graph.hpp"

namespace binedge {

class ParseError : public std::invalid_argument {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// First line "n m", then m lines "i j" with 1 <= i, j <= n.
Graph parse_edgelist(std::string_view text);
std::string emit_edgelist(const Graph& g);

// Short-form graph6 (n <= 62). Surrounding whitespace is ignored.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

}  // namespace binedge
