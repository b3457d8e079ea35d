#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linfor/graph.hpp"

namespace linfor {

struct Graph6Error : std::runtime_error {
  enum class Kind { bad_char, truncated, nonzero_padding, order_too_large, bad_length };
  Kind kind;
  Graph6Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// One graph6 record (no trailing newline). Accepts the optional
// ">>graph6<<" header prefix. Orders up to 128 (single-byte and the
// four-byte '~' long form).
Graph decode_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);

// Edge-list format: header line "n m", then m lines "u v" with 0-based
// endpoints. Malformed data (self-loops, duplicate or out-of-range edges,
// wrong edge count) is rejected, not repaired.
struct ParseError : std::runtime_error {
  std::size_t line_no;  // 1-based
  ParseError(std::size_t line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_no(line) {}
};

Graph read_edge_list(std::istream& in);
std::string write_edge_list(const Graph& g);

enum class StreamFormat { autodetect, graph6, edge_list };

// Streams graphs out of a file or istream: one graph per non-empty line in
// graph6 mode, a single graph in edge-list mode. Format autodetection keys
// on the first byte (digits can only start an edge-list header; graph6
// bytes are all >= 63).
class GraphStream {
 public:
  GraphStream(std::istream& in, StreamFormat format = StreamFormat::autodetect);
  explicit GraphStream(const std::string& path,
                       StreamFormat format = StreamFormat::autodetect);

  // (record index starting at 0, graph); nullopt at end of input.
  std::optional<std::pair<std::size_t, Graph>> next();

  std::size_t line_number() const { return line_no_; }

 private:
  std::unique_ptr<std::istream> owned_;
  std::istream* in_;
  StreamFormat format_;
  std::size_t line_no_ = 0;
  std::size_t index_ = 0;
  bool done_ = false;

  void detect_format();
};

std::vector<Graph> read_graph_file(const std::string& path,
                                   StreamFormat format = StreamFormat::autodetect);

}  // namespace linfor
