#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hlindex/graph.hpp"

namespace hl {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// graph6: N(n) header, then the upper triangle column by column
// (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per byte offset by 63.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);

// Edge-list text: first line "n m", then m lines "u v".
std::string edgelist_encode(const Graph& g);
Graph edgelist_decode(std::string_view text);

enum class GraphFormat { graph6, edgelist };

/// A single graph6 token is graph6; a first line with two integers is an
/// edge list. Anything else throws ParseError.
GraphFormat detect_format(std::string_view text);
Graph parse_graph(std::string_view text, GraphFormat format);

/// Non-empty, non-comment lines of a graph6 stream.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace hl
