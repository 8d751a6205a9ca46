#include "k2t/graph6.hpp"

#include "k2t/errors.hpp"

namespace k2t {

namespace {

constexpr int kBias = 63;
constexpr char kLongHeader = '~';
constexpr std::string_view kFileHeader = ">>graph6<<";

int sextet(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) throw ParseError("graph6: truncated input", pos);
  const int c = static_cast<unsigned char>(s[pos]);
  if (c < kBias || c > kBias + 63) throw ParseError("graph6: byte out of range", pos);
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  std::size_t base = 0;
  if (line.starts_with(kFileHeader)) base = kFileHeader.size();
  if (line.ends_with('\n')) line.remove_suffix(1);
  if (line.ends_with('\r')) line.remove_suffix(1);

  std::size_t pos = base;
  if (pos >= line.size()) throw ParseError("graph6: missing size header", pos);

  std::size_t n = 0;
  if (line[pos] == kLongHeader) {
    if (pos + 1 < line.size() && line[pos + 1] == kLongHeader) {
      throw ParseError("graph6: 8-byte size header (n >= 2^18) unsupported", pos);
    }
    ++pos;
    for (int k = 0; k < 3; ++k) n = (n << 6) | static_cast<std::size_t>(sextet(line, pos++));
    if (n <= 62) throw ParseError("graph6: extended header used for n <= 62", base);
  } else {
    n = static_cast<std::size_t>(sextet(line, pos++));
  }
  if (n > Graph::kMaxOrder) throw ParseError("graph6: order exceeds cap", base);

  Graph g(n);
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() < pos + bytes) throw ParseError("graph6: truncated bit section", line.size());
  if (line.size() > pos + bytes) throw ParseError("graph6: trailing garbage", pos + bytes);

  std::size_t k = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i, ++k) {
      const int byte = sextet(line, pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero.
  if (bits % 6 != 0) {
    const int last = sextet(line, pos + bytes - 1);
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if (last & pad_mask) throw ParseError("graph6: nonzero padding bits", pos + bytes - 1);
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(kLongHeader);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
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

void read_graph6_stream(std::istream& in, const std::function<void(Graph)>& sink) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Graph g;
    try {
      g = parse_graph6(line);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.message(), e.offset());
    }
    sink(std::move(g));
  }
}

}  // namespace k2t
