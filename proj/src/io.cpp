#include "binedge/io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace binedge {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<long> integers(std::string_view line, int line_no) {
  std::vector<long> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos == line.size()) break;
    long value = 0;
    auto [end, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc() || (end != line.data() + line.size() && *end != ' ' && *end != '\t'))
      throw ParseError(line_no, "malformed line '" + std::string(line) + "'");
    out.push_back(value);
    pos = static_cast<std::size_t>(end - line.data());
  }
  return out;
}

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : std::invalid_argument("line " + std::to_string(line) + ": " + message), line_(line) {}

Graph parse_edgelist(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> lines;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto line = trim(text.substr(start, end - start));
    if (!line.empty()) lines.emplace_back(line_no, line);
    start = end + 1;
  }
  if (lines.empty()) throw ParseError(1, "missing header 'n m'");
  const auto header = integers(lines[0].second, lines[0].first);
  if (header.size() != 2) throw ParseError(lines[0].first, "header must be 'n m'");
  const long n = header[0];
  const long m = header[1];
  if (n < 0 || n > kMaxVertices) throw ParseError(lines[0].first, "vertex count out of range");
  if (m < 0) throw ParseError(lines[0].first, "negative edge count");
  if (static_cast<long>(lines.size()) - 1 != m)
    throw ParseError(lines.back().first, "expected " + std::to_string(m) + " edge lines, found " +
                                             std::to_string(lines.size() - 1));
  std::vector<Edge> edges;
  std::vector<std::vector<bool>> seen(static_cast<std::size_t>(n) + 1, std::vector<bool>(static_cast<std::size_t>(n) + 1));
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto [no, line] = lines[k];
    const auto uv = integers(line, no);
    if (uv.size() != 2) throw ParseError(no, "edge line must be 'i j'");
    const long u = uv[0];
    const long v = uv[1];
    if (u < 1 || u > n || v < 1 || v > n) throw ParseError(no, "vertex out of range 1.." + std::to_string(n));
    if (u == v) throw ParseError(no, "self-loop at vertex " + std::to_string(u));
    const auto a = static_cast<std::size_t>(std::min(u, v));
    const auto b = static_cast<std::size_t>(std::max(u, v));
    if (seen[a][b]) throw ParseError(no, "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
    seen[a][b] = true;
    edges.push_back({static_cast<int>(a), static_cast<int>(b)});
  }
  return Graph(static_cast<int>(n), edges);
}

std::string emit_edgelist(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Graph parse_graph6(std::string_view text) {
  const auto s = trim(text);
  if (s.empty()) throw ParseError(1, "empty graph6 string");
  for (char c : s)
    if (c < 63 || c > 126) throw ParseError(1, "graph6 byte out of range 63..126");
  const int n = s[0] - 63;
  if (n > 62) throw ParseError(1, "only the short graph6 form (n <= 62) is supported");
  if (n > kMaxVertices) throw ParseError(1, "graph has more than " + std::to_string(kMaxVertices) + " vertices");
  const std::size_t bit_count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t byte_count = (bit_count + 5) / 6;
  if (s.size() - 1 < byte_count) throw ParseError(1, "truncated graph6 payload");
  if (s.size() - 1 > byte_count) throw ParseError(1, "trailing bytes after graph6 payload");
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = s[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i + 1, j + 1});
    }
  for (; k < byte_count * 6; ++k)
    if (((s[1 + k / 6] - 63) >> (5 - k % 6)) & 1) throw ParseError(1, "nonzero graph6 padding bits");
  return Graph(n, edges);
}

std::string emit_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 62) throw GraphError("graph6 short form holds at most 62 vertices");
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

}  // namespace binedge
