#include "hlindex/io.hpp"

#include <charconv>
#include <istream>
#include <sstream>

namespace hl {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

void append_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
  }
}

std::size_t sextet(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("graph6: truncated input", pos);
  auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw ParseError("graph6: character outside 63..126", pos);
  return c - 63;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' ||
                        s.front() == '\n')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  append_size(out, n);
  int filled = 0;
  unsigned bits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      bits = (bits << 1) | (g.has_edge(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + bits));
        bits = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (bits << (6 - filled))));
  return out;
}

Graph graph6_decode(std::string_view text) {
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  std::size_t pos = 0;
  std::size_t n = sextet(text, pos++);
  if (n == 63) {
    std::size_t first = sextet(text, pos);
    if (first == 63) {
      ++pos;
      n = 0;
      for (int k = 0; k < 6; ++k) n = (n << 6) | sextet(text, pos++);
    } else {
      n = 0;
      for (int k = 0; k < 3; ++k) n = (n << 6) | sextet(text, pos++);
    }
  }
  const std::size_t bit_count = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t byte_count = (bit_count + 5) / 6;
  if (text.size() - pos < byte_count) {
    throw ParseError("graph6: truncated adjacency bits", text.size());
  }
  if (text.size() - pos > byte_count) {
    throw ParseError("graph6: trailing characters", pos + byte_count);
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      std::size_t byte = sextet(text, pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1u) edges.emplace_back(i, j);
    }
  }
  if (bit_count % 6 != 0) {
    std::size_t last = sextet(text, pos + byte_count - 1);
    unsigned pad = 6 - bit_count % 6;
    if (last & ((1u << pad) - 1u)) {
      throw ParseError("graph6: non-zero padding bits", pos + byte_count - 1);
    }
  }
  return Graph::from_edge_list(n, edges);
}

std::string edgelist_encode(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph edgelist_decode(std::string_view text) {
  std::vector<std::size_t> numbers;
  std::vector<std::size_t> offsets;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++pos;
      continue;
    }
    if (c == '#') {
      while (pos < text.size() && text[pos] != '\n') ++pos;
      continue;
    }
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) throw ParseError("edge list: expected a non-negative integer", pos);
    offsets.push_back(pos);
    numbers.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    if (pos < text.size() && !(text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r' ||
                               text[pos] == '\n' || text[pos] == '#')) {
      throw ParseError("edge list: unexpected character", pos);
    }
  }
  if (numbers.size() < 2) throw ParseError("edge list: missing \"n m\" header", text.size());
  const std::size_t n = numbers[0];
  const std::size_t m = numbers[1];
  if (numbers.size() != 2 + 2 * m) {
    throw ParseError("edge list: header announces " + std::to_string(m) + " edges, found " +
                         std::to_string((numbers.size() - 2) / 2),
                     numbers.size() > 2 ? offsets.back() : text.size());
  }
  std::vector<Edge> edges;
  for (std::size_t e = 0; e < m; ++e) {
    std::size_t u = numbers[2 + 2 * e];
    std::size_t v = numbers[3 + 2 * e];
    if (u >= n || v >= n) throw ParseError("edge list: vertex out of range", offsets[2 + 2 * e]);
    if (u == v) throw ParseError("edge list: self-loop", offsets[2 + 2 * e]);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph::from_edge_list(n, edges);
}

GraphFormat detect_format(std::string_view text) {
  std::string_view body = trim(text);
  if (body.empty()) throw ParseError("empty graph input", 0);
  std::string_view first_line = body.substr(0, body.find('\n'));
  first_line = trim(first_line);
  bool has_space = first_line.find_first_of(" \t") != std::string_view::npos;
  bool all_numeric = first_line.find_first_not_of("0123456789 \t") == std::string_view::npos;
  if (has_space && all_numeric) return GraphFormat::edgelist;
  if (!has_space && body.find('\n') == std::string_view::npos) return GraphFormat::graph6;
  throw ParseError("cannot detect graph format; pass --format", 0);
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::graph6) return graph6_decode(trim(text));
  return edgelist_decode(text);
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    out.push_back(graph6_decode(body));
  }
  return out;
}

}  // namespace hl
