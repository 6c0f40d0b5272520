#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mcvc/graph.hpp"

namespace mcvc {

enum class GraphFormat { graph6, edgelist };

/// Malformed graph text. `where()` is a byte offset (graph6) or 1-based line (edgelist).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t where) : std::runtime_error(what), where_(where) {}
  std::size_t where() const { return where_; }

 private:
  std::size_t where_;
};

/// graph6 reads the first non-empty line (an optional ">>graph6<<" header is
/// skipped). edgelist is "n" on the first line, then one 0-based "u v" per line;
/// blank lines and '#' comments are ignored, duplicate edges merge.
Graph parse_graph(std::string_view text, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

/// graph6 unless the first non-blank character is a digit or '#'.
GraphFormat detect_format(std::string_view text);
GraphFormat format_from_name(std::string_view name);

}  // namespace mcvc
