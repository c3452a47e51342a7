#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "binedge/errors.hpp"
#include "binedge/graph.hpp"

namespace binedge {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_vertex(std::string_view tok, std::string_view line) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError("malformed vertex token '" + std::string(tok) + "' in line '" +
                     std::string(line) + "'");
  }
  if (v <= 0) {
    throw ParseError("vertex index must be positive, got '" + std::string(tok) + "'");
  }
  if (v > Graph::kMaxOrder) {
    throw ParseError("vertex index '" + std::string(tok) + "' exceeds " +
                     std::to_string(Graph::kMaxOrder));
  }
  return v;
}

bool looks_like_graph6(std::string_view s) {
  if (s.starts_with(">>graph6<<")) return true;
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return c >= 63 && c <= 126; });
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  int declared = 0;
  int max_vertex = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;

    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      std::string_view comment = trim(line.substr(hash + 1));
      if (comment.starts_with("n=")) {
        declared = parse_vertex(trim(comment.substr(2)), raw);
      }
      line = line.substr(0, hash);
    }
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks.size() != 2) {
      throw ParseError("malformed line '" + std::string(trim(raw)) +
                       "': expected two vertex indices");
    }
    int u = parse_vertex(toks[0], raw);
    int v = parse_vertex(toks[1], raw);
    if (u == v) {
      throw ParseError("loop edge '" + std::string(trim(raw)) + "'");
    }
    edges.emplace_back(std::min(u, v), std::max(u, v));
    max_vertex = std::max({max_vertex, u, v});
  }
  int n = std::max(declared, max_vertex);
  if (n == 0) throw ParseError("empty graph description");
  if (declared != 0 && max_vertex > declared) {
    throw ParseError("vertex " + std::to_string(max_vertex) +
                     " exceeds declared order " + std::to_string(declared));
  }
  return Graph(n, edges);
}

Graph parse_graph6(std::string_view text) {
  std::string_view s = trim(text);
  if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
  if (s.empty()) throw ParseError("empty graph6 record");
  for (char c : s) {
    if (c < 63 || c > 126) {
      throw ParseError(std::string("invalid graph6 character '") + c + "'");
    }
  }
  int n = s[0] - 63;
  if (n == 63) throw ParseError("graph6 orders above 62 are not supported");
  if (n < 1) throw ParseError("graph6 record declares an empty graph");
  std::size_t bits = std::size_t(n) * (n - 1) / 2;
  std::size_t need = (bits + 5) / 6;
  if (s.size() != 1 + need) {
    throw ParseError("graph6 record '" + std::string(s) + "' has length " +
                     std::to_string(s.size()) + ", expected " + std::to_string(1 + need));
  }
  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = s[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i + 1, j + 1);
    }
  }
  return g;
}

Graph parse_graph(std::string_view text) {
  std::string_view s = trim(text);
  if (looks_like_graph6(s)) return parse_graph6(s);
  return parse_edge_list(text);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "# n=" << g.order() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

std::string to_graph6(const Graph& g) {
  int n = g.order();
  if (n > 62) throw DomainError("graph6 output limited to 62 vertices");
  std::string out(1, char(n + 63));
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i + 1, j + 1) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(char(acc + 63));
        acc = filled = 0;
      }
    }
  }
  if (filled != 0) out.push_back(char((acc << (6 - filled)) + 63));
  return out;
}

}  // namespace binedge
