#include "itg/graph_io.hpp"

#include <charconv>
#include <istream>
#include <sstream>

#include "itg/error.hpp"

namespace itg {

namespace {

constexpr int kOffset = 63;
constexpr char kMaxByte = 126;
constexpr std::string_view kHeader = ">>graph6<<";

int chunk_at(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) throw ParseError("graph6 input truncated", pos);
  const char c = s[pos];
  if (c < kOffset || c > kMaxByte) {
    throw ParseError("graph6 byte " + std::to_string(static_cast<int>(static_cast<unsigned char>(c))) +
                         " outside [63,126]",
                     pos);
  }
  return c - kOffset;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kHeader)) base = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  std::size_t pos = base;
  std::size_t n = 0;
  if (pos >= text.size()) throw ParseError("empty graph6 string", pos);
  if (text[pos] != kMaxByte) {
    n = static_cast<std::size_t>(chunk_at(text, pos));
    pos += 1;
  } else if (pos + 1 < text.size() && text[pos + 1] != kMaxByte) {
    for (int i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(chunk_at(text, pos + i));
    pos += 4;
  } else {
    for (int i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::size_t>(chunk_at(text, pos + i));
    pos += 8;
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                         std::to_string(bytes),
                     text.size() < pos + bytes ? text.size() : pos + bytes);
  }

  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::size_t bit = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++bit) {
      const int chunk = chunk_at(text, pos + bit / 6);
      if (chunk & (1 << (5 - bit % 6))) pairs.emplace_back(u, v);
    }
  }
  // Padding bits must be zero.
  if (bits % 6 != 0) {
    const int last = chunk_at(text, pos + bytes - 1);
    if (last & ((1 << (6 - bits % 6)) - 1)) throw ParseError("graph6 padding bits not zero", pos + bytes - 1);
  }
  return Graph::from_edges(n, std::span<const std::pair<Vertex, Vertex>>(pairs));
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= kGraph6SmallMax) {
    out.push_back(static_cast<char>(kOffset + n));
  } else if (n <= kGraph6MediumMax) {
    out.push_back(kMaxByte);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(kOffset + ((n >> shift) & 63)));
  } else if (n <= kGraph6LargeMax) {
    out.push_back(kMaxByte);
    out.push_back(kMaxByte);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(kOffset + ((n >> shift) & 63)));
  } else {
    throw PreconditionError("graph too large for graph6: n=" + std::to_string(n));
  }

  int chunk = 0;
  int filled = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      chunk = (chunk << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kOffset + chunk));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kOffset + (chunk << (6 - filled))));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw ParseError("edge list must start with \"n m\"", 0);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = -1;
    long long v = -1;
    if (!(in >> u >> v)) {
      throw ParseError("edge list truncated after " + std::to_string(i) + " edges",
                       static_cast<std::size_t>(std::max<std::streamoff>(0, in.tellg())));
    }
    if (u < 0 || v < 0) throw GraphError("negative vertex id in edge list");
    pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph::from_edges(static_cast<std::size_t>(n), std::span<const std::pair<Vertex, Vertex>>(pairs));
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_graph(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty graph input", 0);
  text.remove_prefix(first);
  if (text.front() >= '0' && text.front() <= '9') return parse_edge_list(text);
  std::size_t eol = text.find('\n');
  return parse_graph6(text.substr(0, eol));
}

std::vector<Graph> read_graphs(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  std::string_view view = text;
  const std::size_t first = view.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  if (view[first] >= '0' && view[first] <= '9') return {parse_edge_list(view.substr(first))};

  std::vector<Graph> graphs;
  std::size_t start = 0;
  while (start < view.size()) {
    std::size_t end = view.find('\n', start);
    if (end == std::string_view::npos) end = view.size();
    std::string_view line = view.substr(start, end - start);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (!line.empty()) graphs.push_back(parse_graph6(line));
    start = end + 1;
  }
  return graphs;
}

}  // namespace itg
