#include "gss/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>

namespace gss {

int Graph::edge_count() const {
  int total = 0;
  for (const auto& row : adj_) total += row.count();
  return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[static_cast<size_t>(u)].indices())
      if (u < v) out.emplace_back(u, v);
  return out;
}

VertexSet neighbourhood(const Graph& g, int u) { return g.neighbours(u); }

VertexSet odd_neighbourhood(const Graph& g, const VertexSet& d) {
  if (d.size() != g.order())
    throw std::invalid_argument("odd_neighbourhood: vertex set width does not match graph order");
  VertexSet acc(g.order());
  for (int u : d.indices()) acc ^= g.neighbours(u);
  return acc;
}

Graph complement_graph(const Graph& g) {
  const int n = g.order();
  Graph c(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

namespace {

// Whitespace-separated fields of one line, or empty for blank/comment lines.
std::vector<std::string_view> line_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

bool parse_int(std::string_view s, long& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

Graph parse_graph(std::string_view text) {
  long n = -1;
  Graph g(1);
  int line_number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_number;

    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    auto fields = line_fields(line);

    if (n < 0) {
      if (fields.size() != 1 || !parse_int(fields[0], n) || n < 1)
        throw GraphParseError(line_number, "expected a positive vertex count, got '" +
                                               std::string(line) + "'");
      if (n > 1'000'000) throw GraphParseError(line_number, "vertex count too large");
      g = Graph(static_cast<int>(n));
      continue;
    }

    long u = 0, v = 0;
    if (fields.size() != 2 || !parse_int(fields[0], u) || !parse_int(fields[1], v))
      throw GraphParseError(line_number, "expected an edge 'u v', got '" + std::string(line) + "'");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw GraphParseError(line_number, "vertex index out of range [0," + std::to_string(n - 1) +
                                             "] in '" + std::string(line) + "'");
    if (u == v)
      throw GraphParseError(line_number, "self-loop '" + std::string(line) + "' is not allowed");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw GraphParseError(line_number, "missing vertex count");
  return g;
}

std::string graph_hash(const Graph& g) {
  auto fnv1a = [](uint64_t h, std::string_view bytes) {
    for (unsigned char c : bytes) {
      h ^= c;
      h *= 0x100000001b3ull;
    }
    return h;
  };
  uint64_t h = 0xcbf29ce484222325ull;
  h = fnv1a(h, std::to_string(g.order()));
  h = fnv1a(h, "\n");
  for (auto [u, v] : g.edges()) {
    h = fnv1a(h, std::to_string(u));
    h = fnv1a(h, " ");
    h = fnv1a(h, std::to_string(v));
    h = fnv1a(h, "\n");
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace gss
