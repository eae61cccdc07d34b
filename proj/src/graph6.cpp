#include "locgame/graph6.hpp"

#include <sstream>

namespace locgame {

namespace {
constexpr int kOffset = 63;
constexpr int kMaxSingleByte = 62;
}  // namespace

Graph parse_graph6(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("graph6: empty input");
  for (char c : text)
    if (c < 63 || c > 126)
      throw std::invalid_argument("graph6: character out of range 63..126");
  if (text[0] == '~')
    throw std::invalid_argument("graph6: multi-byte order header not supported (n > 62)");

  const int n = text[0] - kOffset;
  const int pairs = n * (n - 1) / 2;
  const std::size_t want = 1 + (static_cast<std::size_t>(pairs) + 5) / 6;
  if (text.size() != want)
    throw std::invalid_argument("graph6: body length does not match order byte");

  std::vector<std::pair<int, int>> edges;
  int pos = 0;
  int col = 1, row = 0;  // bit position -> pair (row, col), column-major upper triangle
  for (std::size_t ci = 1; ci < text.size(); ++ci) {
    int group = text[ci] - kOffset;
    for (int b = 5; b >= 0; --b, ++pos) {
      int bit = (group >> b) & 1;
      if (pos < pairs) {
        if (bit) edges.emplace_back(row, col);
        if (++row == col) {
          row = 0;
          ++col;
        }
      } else if (bit) {
        throw std::invalid_argument("graph6: nonzero padding bits");
      }
    }
  }
  return Graph(n, edges);
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxSingleByte)
    throw std::invalid_argument("graph6: unsupported size (n > 62)");
  std::string out;
  out.push_back(static_cast<char>(n + kOffset));

  int group = 0, filled = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      group = (group << 1) | (g.adjacent(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kOffset));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kOffset));
  return out;
}

std::vector<Graph> parse_graph6_lines(const std::string& text) {
  std::vector<Graph> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) out.push_back(parse_graph6(line));
  }
  return out;
}

}  // namespace locgame
