#include "hamtough/graph_io.hpp"

#include <array>
#include <cstdint>
#include <sstream>
#include <vector>

namespace hamtough {

namespace {

constexpr int kBias = 63;

int decode_byte(char c) {
  const auto u = static_cast<unsigned char>(c);
  if (u < 63 || u > 126)
    throw ParseError("graph6 byte " + std::to_string(u) + " outside 63..126");
  return u - kBias;
}

std::string_view trim_line(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  constexpr std::string_view header = ">>graph6<<";
  if (s.starts_with(header)) s.remove_prefix(header.size());
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  std::string_view s = trim_line(line);
  if (s.empty()) throw ParseError("empty graph6 line");

  std::size_t at = 0;
  long n = 0;
  if (s[0] == '~') {
    if (s.size() >= 2 && s[1] == '~') throw ParseError("graph6 header: n >= 258048 unsupported");
    if (s.size() < 4) throw ParseError("graph6 header truncated");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | decode_byte(s[i]);
    if (n < 63) throw ParseError("graph6 header: long form used for n < 63");
    at = 4;
  } else {
    n = decode_byte(s[0]);
    at = 1;
  }
  if (n > kMaxVertices) throw ParseError("graph6: n = " + std::to_string(n) + " exceeds 64");

  const long pairs = n * (n - 1) / 2;
  const long bytes = (pairs + 5) / 6;
  const long available = static_cast<long>(s.size() - at);
  if (available < bytes) throw ParseError("graph6 bit stream truncated");
  if (available > bytes) throw ParseError("graph6 line has trailing bytes");

  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  long k = 0;
  for (long b = 0; b < bytes; ++b) {
    const int chunk = decode_byte(s[at + b]);
    for (int bit = 5; bit >= 0; --bit, ++k) {
      const bool set = (chunk >> bit) & 1;
      if (k >= pairs) {
        if (set) throw ParseError("graph6 padding bits are not zero");
        continue;
      }
      if (!set) continue;
      // Column-major upper triangle: k enumerates (0,1),(0,2),(1,2),(0,3),...
      long j = 1;
      while (j * (j + 1) / 2 <= k) ++j;
      const long i = k - j * (j - 1) / 2;
      rows[i] |= std::uint64_t{1} << j;
      rows[j] |= std::uint64_t{1} << i;
    }
  }
  return Graph::from_adjacency(static_cast<int>(n), rows);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

Graph parse_edge_list(std::istream& in) {
  long n = -1;
  long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw ParseError("edge list: bad \"n m\" header");
  if (n > kMaxVertices) throw ParseError("edge list: n exceeds 64");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long i = 0; i < m; ++i) {
    long u = 0;
    long v = 0;
    if (!(in >> u >> v)) throw ParseError("edge list: expected " + std::to_string(m) + " edges");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge list: endpoint out of range");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  try {
    return Graph::from_edge_list(static_cast<int>(n), edges);
  } catch (const GraphError& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_graph_text(std::string_view text) {
  std::istringstream probe{std::string(text)};
  long a = 0;
  long b = 0;
  if (probe >> a >> b) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
  }
  std::string_view line = text;
  if (auto nl = line.find('\n'); nl != std::string_view::npos) line = line.substr(0, nl);
  return parse_graph6(line);
}

}  // namespace hamtough
