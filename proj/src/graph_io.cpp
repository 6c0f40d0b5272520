#include "mcvc/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <vector>

namespace mcvc {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

bool is_blank(std::string_view line) {
  for (char c : line)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits into lines, remembering each line's starting byte offset.
struct Line {
  std::string_view text;
  std::size_t offset;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({line, start});
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

int graph6_value(char c, std::size_t offset) {
  int v = static_cast<unsigned char>(c) - 63;
  if (v < 0 || v > 63) {
    throw ParseError("graph6: invalid byte at offset " + std::to_string(offset), offset);
  }
  return v;
}

Graph parse_graph6(std::string_view text) {
  std::string_view body;
  std::size_t base = 0;
  bool found = false;
  for (const auto& line : split_lines(text)) {
    if (is_blank(line.text)) continue;
    if (found) {
      throw ParseError("graph6: more than one graph (second starts at offset " + std::to_string(line.offset) + ")",
                       line.offset);
    }
    body = line.text;
    base = line.offset;
    found = true;
  }
  if (!found) throw ParseError("graph6: empty input", 0);
  if (body.substr(0, kGraph6Header.size()) == kGraph6Header) {
    body.remove_prefix(kGraph6Header.size());
    base += kGraph6Header.size();
  }
  while (!body.empty() && (body.back() == ' ' || body.back() == '\t')) body.remove_suffix(1);
  if (body.empty()) throw ParseError("graph6: missing vertex count", base);

  std::size_t pos = 0;
  auto take = [&]() -> int {
    if (pos >= body.size())
      throw ParseError("graph6: truncated header at offset " + std::to_string(base + pos), base + pos);
    int v = graph6_value(body[pos], base + pos);
    ++pos;
    return v;
  };

  std::uint64_t n = 0;
  int first = take();
  if (first < 63) {
    n = static_cast<std::uint64_t>(first);
  } else {
    int second = take();
    int chunks = 3;
    if (second == 63) {
      chunks = 6;
      second = take();
    }
    n = static_cast<std::uint64_t>(second);
    for (int i = 1; i < chunks; ++i) n = (n << 6) | static_cast<std::uint64_t>(take());
  }
  if (n > 100000) throw ParseError("graph6: vertex count " + std::to_string(n) + " too large", base);

  const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t need = (pairs + 5) / 6;
  if (body.size() - pos != need) {
    throw ParseError("graph6: expected " + std::to_string(need) + " edge bytes, found " +
                         std::to_string(body.size() - pos) + " (offset " + std::to_string(base + pos) + ")",
                     base + pos);
  }

  Graph g(static_cast<int>(n));
  std::uint64_t bit = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++bit) {
      std::size_t at = pos + static_cast<std::size_t>(bit / 6);
      int value = graph6_value(body[at], base + at);
      if ((value >> (5 - bit % 6)) & 1) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  if (bit % 6 != 0) {
    std::size_t at = pos + static_cast<std::size_t>(bit / 6);
    int value = graph6_value(body[at], base + at);
    if (value & ((1 << (6 - bit % 6)) - 1)) {
      throw ParseError("graph6: non-zero padding bits at offset " + std::to_string(base + at), base + at);
    }
  }
  return g;
}

long parse_long(std::string_view token, std::size_t line_no, const char* what) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(
        "edgelist: line " + std::to_string(line_no) + ": malformed " + what + " '" + std::string(token) + "'", line_no);
  }
  return value;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

Graph parse_edgelist(std::string_view text) {
  auto lines = split_lines(text);
  std::optional<Graph> g;
  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    const std::size_t line_no = idx + 1;
    auto line = lines[idx].text;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto toks = tokens(line);
    if (!g) {
      if (toks.size() != 1)
        throw ParseError("edgelist: line " + std::to_string(line_no) + ": header must be a single vertex count",
                         line_no);
      long n = parse_long(toks[0], line_no, "vertex count");
      if (n < 0 || n > 1000000)
        throw ParseError("edgelist: line " + std::to_string(line_no) + ": vertex count out of range", line_no);
      g.emplace(static_cast<int>(n));
      continue;
    }
    if (toks.size() != 2) throw ParseError("edgelist: line " + std::to_string(line_no) + ": expected 'u v'", line_no);
    long u = parse_long(toks[0], line_no, "vertex");
    long v = parse_long(toks[1], line_no, "vertex");
    if (u < 0 || v < 0 || u >= g->n() || v >= g->n()) {
      throw ParseError("edgelist: line " + std::to_string(line_no) + ": vertex index out of range", line_no);
    }
    if (u == v) throw ParseError("edgelist: line " + std::to_string(line_no) + ": loop edge", line_no);
    g->add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!g) throw ParseError("edgelist: missing vertex count header", 1);
  return *g;
}

std::string serialize_graph6(const Graph& g) {
  std::string out;
  const auto n = static_cast<std::uint64_t>(g.n());
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.n(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

std::string serialize_edgelist(const Graph& g) {
  std::ostringstream os;
  os << g.n() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::graph6 ? parse_graph6(text) : parse_edgelist(text);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::graph6 ? serialize_graph6(g) : serialize_edgelist(g);
}

GraphFormat detect_format(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return (std::isdigit(static_cast<unsigned char>(c)) || c == '#') ? GraphFormat::edgelist : GraphFormat::graph6;
  }
  return GraphFormat::graph6;
}

GraphFormat format_from_name(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::graph6;
  if (name == "edgelist") return GraphFormat::edgelist;
  throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

}  // namespace mcvc
