#include "recon/graph6.hpp"

namespace recon {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

bool printable(char c) { return c >= 63 && c <= 126; }

}  // namespace

const char* to_string(Graph6Errc code) {
  switch (code) {
    case Graph6Errc::malformed_header: return "malformed header";
    case Graph6Errc::order_out_of_range: return "order out of range";
    case Graph6Errc::truncated: return "truncated bit field";
    case Graph6Errc::trailing_data: return "trailing data";
    case Graph6Errc::invalid_character: return "invalid character";
    case Graph6Errc::nonzero_padding: return "nonzero padding bits";
  }
  return "unknown graph6 error";
}

Graph6Error::Graph6Error(Graph6Errc code, const std::string& detail)
    : std::runtime_error(std::string("graph6: ") + to_string(code) + (detail.empty() ? "" : ": " + detail)),
      code_(code) {}

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw Graph6Error(Graph6Errc::malformed_header, "empty input");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] == 126) {
    // Long forms: 126 + 3 bytes (n <= 258047) or 126 126 + 6 bytes.
    const bool huge = text.size() > 1 && text[1] == 126;
    const std::size_t width = huge ? 6 : 3;
    const std::size_t start = huge ? 2 : 1;
    if (text.size() < start + width) throw Graph6Error(Graph6Errc::malformed_header, "short long-form order");
    for (std::size_t i = start; i < start + width; ++i) {
      if (!printable(text[i])) throw Graph6Error(Graph6Errc::malformed_header, "bad order byte");
      n = (n << 6) | (text[i] - kBias);
    }
    pos = start + width;
  } else if (printable(text[0])) {
    n = text[0] - kBias;
    pos = 1;
  } else {
    throw Graph6Error(Graph6Errc::malformed_header, "bad order byte");
  }
  if (n < 1 || n > kMaxOrder) {
    throw Graph6Error(Graph6Errc::order_out_of_range, "n=" + std::to_string(n) + ", supported 1.." +
                                                          std::to_string(kMaxOrder));
  }

  const int order = static_cast<int>(n);
  const std::size_t bits = static_cast<std::size_t>(order) * (order - 1) / 2;
  const std::size_t groups = (bits + 5) / 6;
  const std::string_view body = text.substr(pos);
  if (body.size() < groups) {
    throw Graph6Error(Graph6Errc::truncated, "expected " + std::to_string(groups) + " data bytes, got " +
                                                 std::to_string(body.size()));
  }
  if (body.size() > groups) throw Graph6Error(Graph6Errc::trailing_data, std::to_string(body.size() - groups) + " extra bytes");
  for (char c : body)
    if (!printable(c)) throw Graph6Error(Graph6Errc::invalid_character, "byte " + std::to_string(static_cast<int>(c)));

  Graph g(order);
  std::size_t k = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int group = body[k / 6] - kBias;
      if ((group >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  for (; k < groups * 6; ++k) {
    const int group = body[k / 6] - kBias;
    if ((group >> (5 - k % 6)) & 1) throw Graph6Error(Graph6Errc::nonzero_padding, "");
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n < 1 || n > kMaxOrder) throw Graph6Error(Graph6Errc::order_out_of_range, "n=" + std::to_string(n));
  std::string out(1, static_cast<char>(n + kBias));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

}  // namespace recon
