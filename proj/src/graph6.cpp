#include "wellcovered/graph6.hpp"

#include <string>
#include <vector>

#include "wellcovered/errors.hpp"

namespace wellcovered {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kOffset = 63;
constexpr int kBitsPerChar = 6;

std::string_view strip(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' ||
                           text.back() == '\t')) {
    text.remove_suffix(1);
  }
  return text;
}

}  // namespace

Graph from_graph6(std::string_view text) {
  text = strip(text);
  if (text.empty()) throw InputError("empty graph6 line");
  for (char c : text) {
    const int code = static_cast<unsigned char>(c);
    if (code < kOffset || code > 126) {
      throw InputError("graph6 character with code " + std::to_string(code) +
                       " outside 63..126");
    }
  }
  const int size_byte = static_cast<unsigned char>(text.front()) - kOffset;
  if (size_byte == 63) {
    throw CapExceeded("multi-byte graph6 size forms are not supported (order > 62)");
  }
  const auto n = static_cast<std::size_t>(size_byte);
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t chars = (bits + kBitsPerChar - 1) / kBitsPerChar;
  if (text.size() - 1 != chars) {
    throw InputError("graph6 body has " + std::to_string(text.size() - 1) +
                     " characters, expected " + std::to_string(chars) + " for order " +
                     std::to_string(n));
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int chunk = static_cast<unsigned char>(text[1 + k / kBitsPerChar]) - kOffset;
      if ((chunk >> (kBitsPerChar - 1 - k % kBitsPerChar)) & 1) edges.emplace_back(i, j);
    }
  }
  if (k % kBitsPerChar != 0) {
    const int last = static_cast<unsigned char>(text.back()) - kOffset;
    const int pad_mask = (1 << (kBitsPerChar - k % kBitsPerChar)) - 1;
    if ((last & pad_mask) != 0) throw InputError("graph6 padding bits are not zero");
  }
  return Graph::from_edges(n, edges);
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) {
    throw CapExceeded("order " + std::to_string(n) + " exceeds the graph6 cap of 62");
  }
  std::string out(1, static_cast<char>(n + kOffset));
  int chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == kBitsPerChar) {
        out.push_back(static_cast<char>(chunk + kOffset));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (kBitsPerChar - filled)) + kOffset));
  return out;
}

}  // namespace wellcovered
