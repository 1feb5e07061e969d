#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "critlab/graph.hpp"

namespace critlab {

/// Decodes one graph6 record (no header, no trailing newline). Throws
/// ParseError carrying the offending byte offset.
Graph parse_graph6(std::string_view record);

std::string encode_graph6(const Graph& g);

struct Graph6Record {
  std::size_t line = 0;  // 1-based
  std::string text;
};

/// Splits a graph6 stream into records, skipping blank lines and a leading
/// ">>graph6<<" header on any line.
std::vector<Graph6Record> read_graph6_records(std::istream& in);

/// Reads and decodes a whole file; ParseError::line() names the bad record.
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace critlab
