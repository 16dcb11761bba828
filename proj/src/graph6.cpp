#include <string>
#include <string_view>

#include "dwalk/error.hpp"
#include "dwalk/graph.hpp"

// graph6: every byte carries six bits as value + 63. The order n comes first
// (one byte up to 62, then '~' plus three bytes up to 258047), followed by the
// upper triangle in column order x(0,1) x(0,2) x(1,2) x(0,3) ... padded with
// zero bits to a whole byte.

namespace dwalk {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr std::size_t kMaxShortOrder = 62;
constexpr std::size_t kMaxOrder = 258047;

[[noreturn]] void malformed(const std::string& why) {
  throw Error(ErrorCode::MalformedGraph6, "malformed graph6: " + why);
}

std::size_t sextet(char c) {
  const auto v = static_cast<unsigned char>(c);
  if (v < 63 || v > 126) malformed("byte " + std::to_string(v) + " outside 63..126");
  return v - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' ' || text.back() == '\t'))
    text.remove_suffix(1);
  if (text.empty()) malformed("empty input");

  std::size_t n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = sextet(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] == '~') {
    throw Error(ErrorCode::GraphTooLarge,
                "graph6 orders above " + std::to_string(kMaxOrder) +
                    " are not supported");
  } else {
    if (text.size() < 4) malformed("truncated order field");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet(text[i]);
    if (n <= kMaxShortOrder) malformed("long order form used for n <= 62");
    pos = 4;
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = (bits + 5) / 6;
  const auto payload = text.substr(pos);
  if (payload.size() != expected) {
    malformed("declared n=" + std::to_string(n) + " needs " +
              std::to_string(expected) + " payload bytes, got " +
              std::to_string(payload.size()));
  }

  Graph g(n);
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      const auto byte = sextet(payload[bit / 6]);
      if ((byte >> (5 - bit % 6)) & 1U) g.add_edge(i, j);
    }
  }
  if (bit % 6 != 0) {
    const auto tail = sextet(payload[bit / 6]);
    if (tail & ((1U << (6 - bit % 6)) - 1)) malformed("non-zero padding bits");
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const auto n = g.order();
  if (n > kMaxOrder) {
    throw Error(ErrorCode::GraphTooLarge,
                "graph6 writer supports n <= " + std::to_string(kMaxOrder));
  }
  std::string out;
  if (n <= kMaxShortOrder) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3F) + 63));
  }

  unsigned acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
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

}  // namespace dwalk
