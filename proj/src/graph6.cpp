#include "linfor/graph6.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace linfor {

// graph6 layout: N(n) then the upper triangle of the adjacency matrix in
// column-major order x(0,1) x(0,2) x(1,2) x(0,3) ..., packed big-endian
// into 6-bit groups, each group + 63 giving a printable byte in 63..126.
// The final group is zero-padded. N(n) is one byte n+63 for n <= 62 and
// '~' followed by three 6-bit bytes (big-endian) for larger orders; we cap
// orders at 128.

namespace {

constexpr char kHeader[] = ">>graph6<<";

int byte_value(unsigned char c) {
  if (c < 63 || c > 126)
    throw Graph6Error(Graph6Error::Kind::bad_char,
                      "byte " + std::to_string(int(c)) + " outside graph6 range 63..126");
  return c - 63;
}

}  // namespace

Graph decode_graph6(std::string_view line) {
  std::string_view s = line;
  if (s.substr(0, sizeof(kHeader) - 1) == kHeader) s.remove_prefix(sizeof(kHeader) - 1);
  if (s.empty())
    throw Graph6Error(Graph6Error::Kind::truncated, "empty graph6 record");

  std::size_t pos = 0;
  int n;
  int first = byte_value(static_cast<unsigned char>(s[pos]));
  if (first == 63) {  // '~': long form
    ++pos;
    if (pos < s.size() && static_cast<unsigned char>(s[pos]) == 126)
      throw Graph6Error(Graph6Error::Kind::order_too_large,
                        "eight-byte order form exceeds the supported limit of 128");
    if (s.size() - pos < 3)
      throw Graph6Error(Graph6Error::Kind::truncated, "long-form order needs three bytes");
    n = 0;
    for (int k = 0; k < 3; ++k)
      n = (n << 6) | byte_value(static_cast<unsigned char>(s[pos + static_cast<std::size_t>(k)]));
    pos += 3;
  } else {
    n = first;
    ++pos;
  }
  if (n > kMaxOrder)
    throw Graph6Error(Graph6Error::Kind::order_too_large,
                      "order " + std::to_string(n) + " exceeds the supported limit of 128");

  long need_bits = static_cast<long>(n) * (n - 1) / 2;
  long need_bytes = (need_bits + 5) / 6;
  long have_bytes = static_cast<long>(s.size() - pos);
  if (have_bytes < need_bytes)
    throw Graph6Error(Graph6Error::Kind::truncated,
                      "need " + std::to_string(need_bytes) + " adjacency bytes, have " +
                          std::to_string(have_bytes));
  if (have_bytes > need_bytes)
    throw Graph6Error(Graph6Error::Kind::bad_length,
                      "trailing bytes after adjacency data");

  std::vector<std::pair<int, int>> edges;
  long bit = 0;
  int i = 0, j = 1;
  for (long b = 0; b < need_bytes; ++b) {
    int v = byte_value(static_cast<unsigned char>(s[pos + static_cast<std::size_t>(b)]));
    for (int k = 5; k >= 0; --k, ++bit) {
      int x = (v >> k) & 1;
      if (bit < need_bits) {
        if (x) edges.emplace_back(i, j);
        if (++i == j) {
          i = 0;
          ++j;
        }
      } else if (x) {
        throw Graph6Error(Graph6Error::Kind::nonzero_padding,
                          "nonzero padding bit at position " + std::to_string(bit));
      }
    }
  }
  return Graph::from_edges(n, edges);
}

std::string encode_graph6(const Graph& g) {
  int n = g.order();
  if (n > kMaxOrder)
    throw Graph6Error(Graph6Error::Kind::order_too_large,
                      "order " + std::to_string(n) + " exceeds the supported limit of 128");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

namespace {

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!blank(line)) return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError(line_no + 1, "missing edge-list header");
  long n, m;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra))
      throw ParseError(line_no, "edge-list header must be exactly \"n m\"");
  }
  if (n < 0 || n > kMaxOrder)
    throw ParseError(line_no, "order " + std::to_string(n) + " out of range 0..128");
  if (m < 0) throw ParseError(line_no, "negative edge count");

  std::vector<std::pair<int, int>> edges;
  Graph seen = Graph::empty_graph(n > 0 ? static_cast<int>(n) : 1);
  for (long k = 0; k < m; ++k) {
    if (!next_line())
      throw ParseError(line_no + 1,
                       "expected " + std::to_string(m) + " edges, got " + std::to_string(k));
    long u, v;
    std::istringstream es(line);
    std::string extra;
    if (!(es >> u >> v) || (es >> extra))
      throw ParseError(line_no, "edge line must be exactly \"u v\"");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(line_no, "edge endpoint out of range");
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    if (seen.has_edge(static_cast<int>(u), static_cast<int>(v)))
      throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    seen.add_edge(static_cast<int>(u), static_cast<int>(v));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (next_line()) throw ParseError(line_no, "trailing content after last edge");
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i)
      if (g.has_edge(i, j)) out << i << ' ' << j << '\n';
  return out.str();
}

GraphStream::GraphStream(std::istream& in, StreamFormat format)
    : in_(&in), format_(format) {}

GraphStream::GraphStream(const std::string& path, StreamFormat format)
    : owned_(std::make_unique<std::ifstream>(path)), in_(owned_.get()), format_(format) {
  if (!*in_) throw GraphError("cannot open " + path);
}

void GraphStream::detect_format() {
  int c = in_->peek();
  while (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
    in_->get();
    if (c == '\n') ++line_no_;
    c = in_->peek();
  }
  format_ = (c >= '0' && c <= '9') ? StreamFormat::edge_list : StreamFormat::graph6;
}

std::optional<std::pair<std::size_t, Graph>> GraphStream::next() {
  if (done_) return std::nullopt;
  if (format_ == StreamFormat::autodetect) detect_format();

  if (format_ == StreamFormat::edge_list) {
    done_ = true;
    try {
      return std::make_pair(index_++, read_edge_list(*in_));
    } catch (const ParseError& e) {
      throw ParseError(line_no_ + e.line_no, e.what());
    }
  }

  std::string line;
  while (std::getline(*in_, line)) {
    ++line_no_;
    if (blank(line)) continue;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    try {
      return std::make_pair(index_++, decode_graph6(line));
    } catch (const Graph6Error& e) {
      throw ParseError(line_no_, e.what());
    }
  }
  done_ = true;
  return std::nullopt;
}

std::vector<Graph> read_graph_file(const std::string& path, StreamFormat format) {
  GraphStream stream(path, format);
  std::vector<Graph> out;
  while (auto rec = stream.next()) out.push_back(std::move(rec->second));
  return out;
}

}  // namespace linfor
