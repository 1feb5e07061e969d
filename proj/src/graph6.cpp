#include "critlab/graph6.hpp"

#include <fstream>

#include "critlab/errors.hpp"

namespace critlab {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int sextet(std::string_view record, std::size_t offset) {
  if (offset >= record.size()) {
    throw ParseError("graph6 record truncated at byte " + std::to_string(offset), offset);
  }
  const int c = static_cast<unsigned char>(record[offset]);
  if (c < kBias || c > kBias + 63) {
    throw ParseError("invalid graph6 byte " + std::to_string(c) + " at offset " + std::to_string(offset), offset);
  }
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view record) {
  if (record.empty()) throw ParseError("empty graph6 record", 0);
  std::size_t pos = 0;
  long n = 0;
  if (record[0] == '~') {
    if (record.size() > 1 && record[1] == '~') {
      throw ParseError("graph6 orders above 258047 are not supported", 1);
    }
    for (pos = 1; pos <= 3; ++pos) n = (n << 6) | sextet(record, pos);
  } else {
    n = sextet(record, 0);
    pos = 1;
  }
  if (n < 1 || n > Graph::kMaxVertices) {
    throw ParseError("graph6 order " + std::to_string(n) + " outside [1, " + std::to_string(Graph::kMaxVertices) + "]", 0);
  }

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = pos + (bits + 5) / 6;
  if (record.size() != expected) {
    const std::size_t at = record.size() < expected ? record.size() : expected;
    throw ParseError("graph6 record has " + std::to_string(record.size()) + " bytes, expected " +
                         std::to_string(expected),
                     at);
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = sextet(record, pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  // Padding bits must be zero.
  if (bits % 6 != 0) {
    const std::size_t last = pos + bits / 6;
    const int byte = sextet(record, last);
    if (byte & ((1 << (6 - bits % 6)) - 1)) throw ParseError("nonzero padding bits in graph6 record", last);
  }
  for (std::size_t off = pos; off < record.size(); ++off) sextet(record, off);
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

std::vector<Graph6Record> read_graph6_records(std::istream& in) {
  std::vector<Graph6Record> records;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    // Surrounding whitespace is never part of a record (bytes start at 63).
    std::string_view view(line);
    while (!view.empty() && (view.back() == '\r' || view.back() == ' ' || view.back() == '\t')) view.remove_suffix(1);
    while (!view.empty() && (view.front() == ' ' || view.front() == '\t')) view.remove_prefix(1);
    if (view.substr(0, kHeader.size()) == kHeader) view.remove_prefix(kHeader.size());
    if (view.empty()) continue;
    records.push_back({number, std::string(view)});
  }
  return records;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  std::vector<Graph> graphs;
  for (const auto& rec : read_graph6_records(in)) {
    try {
      graphs.push_back(parse_graph6(rec.text));
    } catch (const ParseError& e) {
      throw ParseError(path + ":" + std::to_string(rec.line) + ": " + e.what(), e.offset(), rec.line);
    }
  }
  return graphs;
}

}  // namespace critlab
