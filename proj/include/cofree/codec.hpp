#ifndef COFREE_CODEC_HPP
#define COFREE_CODEC_HPP

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cofree/graph.hpp"

namespace cofree {

/// Malformed textual input. `offset()` is the byte offset of the first
/// offending character within the parsed text.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

// graph6: one graph per line, no trailing newline in the encoded string.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

// Edge list: "n m" header, then m lines "u v" with 0-based endpoints.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

// DIMACS .col: "p edge n m" then "e u v" lines with 1-based endpoints.
std::string to_dimacs_col(const Graph& g, std::string_view comment = {});
Graph from_dimacs_col(std::string_view text);

enum class GraphFormat { Graph6, EdgeList, DimacsCol };

/// Guesses the format from the first meaningful line.
GraphFormat detect_format(std::string_view text);
Graph parse_graph(std::string_view text);
/// All graphs in a graph6 file, one per non-empty line.
std::vector<Graph> parse_graph6_lines(std::string_view text);

std::string encode(const Graph& g, GraphFormat fmt);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace cofree

#endif  // COFREE_CODEC_HPP
