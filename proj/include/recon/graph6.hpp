#ifndef RECON_GRAPH6_HPP
#define RECON_GRAPH6_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "recon/graph.hpp"

namespace recon {

enum class Graph6Errc {
  malformed_header,
  order_out_of_range,
  truncated,
  trailing_data,
  invalid_character,
  nonzero_padding,
};

const char* to_string(Graph6Errc code);

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(Graph6Errc code, const std::string& detail);
  Graph6Errc code() const noexcept { return code_; }

 private:
  Graph6Errc code_;
};

/// Parses one graph6 line (an optional ">>graph6<<" prefix and a trailing
/// newline are accepted). Only orders 1..16 are supported. Padding bits must be
/// zero, so every accepted line is the exact output of write_graph6.
Graph parse_graph6(std::string_view text);

std::string write_graph6(const Graph& g);

}  // namespace recon

#endif  // RECON_GRAPH6_HPP
