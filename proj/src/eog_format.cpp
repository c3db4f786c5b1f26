#include "reo/errors.hpp"
#include "reo/graph.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace reo {

namespace {

bool parse_uint(std::string_view token, std::size_t& out) {
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return !token.empty() && ec == std::errc() && ptr == end;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Splits on runs of blanks.
std::vector<std::string_view> fields(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const auto start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

}  // namespace

EdgeOrderedGraph parse_eog(std::string_view text) {
  if (text.empty() || text.back() != '\n') {
    throw ParseError(0, "missing trailing newline");
  }
  std::optional<std::size_t> n, m;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    const auto line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto parts = fields(line);
    if (!n) {
      std::size_t nv = 0, ne = 0;
      if (parts.size() != 2 || !parts[0].starts_with("n=") || !parts[1].starts_with("m=") ||
          !parse_uint(parts[0].substr(2), nv) || !parse_uint(parts[1].substr(2), ne)) {
        throw ParseError(line_no, "expected header 'n=<int> m=<int>'");
      }
      n = nv;
      m = ne;
      edges.reserve(ne);
      continue;
    }
    std::size_t a = 0, b = 0;
    if (parts.size() != 2 || !parse_uint(parts[0], a) || !parse_uint(parts[1], b)) {
      throw ParseError(line_no, "expected edge line 'u v'");
    }
    if (edges.size() == *m) throw ParseError(line_no, "more edge lines than m=" + std::to_string(*m));
    if (a == b) throw ParseError(line_no, "loop at vertex " + std::to_string(a));
    if (a > b) throw ParseError(line_no, "edge endpoints must satisfy u < v");
    if (b >= *n) throw ParseError(line_no, "endpoint " + std::to_string(b) + " >= n");
    const Edge e(static_cast<Vertex>(a), static_cast<Vertex>(b));
    if (!seen.insert(e).second) throw ParseError(line_no, "duplicate edge");
    edges.push_back(e);
  }
  if (!n) throw ParseError(line_no, "missing header");
  if (edges.size() != *m) {
    throw ParseError(line_no, "expected " + std::to_string(*m) + " edges, found " +
                                  std::to_string(edges.size()));
  }
  return EdgeOrderedGraph(*n, std::move(edges));
}

std::string serialize_eog(const EdgeOrderedGraph& g) {
  std::string out = "n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + "\n";
  for (const auto& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

EdgeOrderedGraph read_eog_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_eog(buf.str());
}

}  // namespace reo
