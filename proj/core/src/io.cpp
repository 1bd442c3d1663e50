#include "linegraph/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <sstream>
#include <vector>

#include "linegraph/errors.hpp"

namespace linegraph {

namespace {

std::string_view trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool parse_number(std::string_view token, std::uint64_t& out) {
  if (token.empty()) return false;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

constexpr std::uint64_t kMaxEdgeListVertex = 1u << 30;

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<std::uint64_t> header;
  std::uint64_t order = 0;
  std::vector<EdgeId> edges;
  std::size_t line_no = 0;
  bool seen_content = false;
  while (!text.empty()) {
    auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.starts_with("n=") || line.starts_with("n =")) {
      if (seen_content) throw ParseError("vertex-count header must come first", line_no);
      std::uint64_t n = 0;
      if (!parse_number(trim(line.substr(line.find('=') + 1)), n) || n > kMaxEdgeListVertex)
        throw ParseError("malformed header '" + std::string(line) + "'", line_no);
      header = n;
      order = n;
      seen_content = true;
      continue;
    }
    seen_content = true;

    auto gap = line.find_first_of(" \t");
    if (gap == std::string_view::npos)
      throw ParseError("expected two vertex IDs, got '" + std::string(line) + "'", line_no);
    std::uint64_t a = 0, b = 0;
    if (!parse_number(trim(line.substr(0, gap)), a) || !parse_number(trim(line.substr(gap)), b))
      throw ParseError("expected two nonnegative integers, got '" + std::string(line) + "'",
                       line_no);
    if (a > kMaxEdgeListVertex || b > kMaxEdgeListVertex)
      throw ParseError("vertex ID too large", line_no);
    if (a == b) throw ParseError("self-loop at vertex " + std::to_string(a), line_no);
    if (header && std::max(a, b) >= *header)
      throw ParseError("vertex ID " + std::to_string(std::max(a, b)) + " exceeds header n=" +
                           std::to_string(*header),
                       line_no);
    order = std::max(order, std::max(a, b) + 1);
    edges.push_back(EdgeId::of(static_cast<Vertex>(a), static_cast<Vertex>(b)));
  }
  return Graph(order, edges);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  for (char c : text)
    if (c < 63 || c > 126)
      throw ParseError("graph6: invalid character code " + std::to_string(static_cast<int>(c)));
  if (text.empty()) throw ParseError("graph6: empty string");

  std::size_t pos = 0;
  auto take = [&](std::size_t count) {
    if (pos + count > text.size()) throw ParseError("graph6: truncated size field");
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < count; ++i) value = (value << 6) | static_cast<std::uint64_t>(text[pos++] - 63);
    return value;
  };
  std::uint64_t n = 0;
  if (text[0] != 126) {
    n = take(1);
  } else if (text.size() > 1 && text[1] != 126) {
    ++pos;
    n = take(3);
  } else {
    pos += 2;
    n = take(6);
  }
  if (n > kMaxEdgeListVertex) throw ParseError("graph6: order too large");

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t chars = (bits + 5) / 6;
  if (text.size() - pos != chars)
    throw ParseError("graph6: expected " + std::to_string(chars) + " data characters, got " +
                     std::to_string(text.size() - pos));

  std::vector<EdgeId> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      int chunk = text[pos + k / 6] - 63;
      if ((chunk >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  // Padding bits must be zero in a well-formed string.
  for (; k < chars * 6; ++k)
    if (((text[pos + k / 6] - 63) >> (5 - k % 6)) & 1) throw ParseError("graph6: nonzero padding");
  return Graph(n, edges);
}

std::string emit_graph6(const Graph& g) {
  std::string out;
  const std::uint64_t n = g.order();
  auto put = [&](std::uint64_t value, int chunks) {
    for (int i = chunks - 1; i >= 0; --i) out.push_back(static_cast<char>(63 + ((value >> (6 * i)) & 63)));
  };
  if (n <= 62) {
    put(n, 1);
  } else if (n <= 258047) {
    out.push_back(126);
    put(n, 3);
  } else {
    out.push_back(126);
    out.push_back(126);
    put(n, 6);
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

std::string emit_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex x = 0; x < g.order(); ++x)
    if (g.degree(x) == 0) out << "  " << x << ";\n";
  for (const auto& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace linegraph
