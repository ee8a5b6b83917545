#ifndef RECON_GRAPH_HPP
#define RECON_GRAPH_HPP

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace recon {

inline constexpr int kMaxOrder = 16;

/// Bit i set means vertex i is a member.
using VertexSet = std::uint32_t;

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
inline constexpr VertexSet full_set(int n) { return n >= 32 ? ~VertexSet{0} : bit(n) - 1; }
inline constexpr int set_size(VertexSet s) { return std::popcount(s); }
inline constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1u; }
inline constexpr int lowest(VertexSet s) { return std::countr_zero(s); }

std::vector<int> members(VertexSet s);
VertexSet make_set(std::initializer_list<int> vertices);
VertexSet make_set(std::span<const int> vertices);

/// Visits every subset of `universe` with exactly `k` members, in
/// lexicographic order of their sorted vertex lists.
template <typename F>
void for_each_subset_of_size(VertexSet universe, int k, F&& f) {
  const int n = set_size(universe);
  if (k < 0 || k > n) return;
  std::array<int, 32> idx{};
  int m = 0;
  for (VertexSet s = universe; s; s &= s - 1) idx[m++] = lowest(s);
  std::array<int, 32> pick{};
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    VertexSet s = 0;
    for (int i = 0; i < k; ++i) s |= bit(idx[pick[i]]);
    f(s);
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) return;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

/// Lexicographic comparison of vertex sets read as sorted index lists.
bool lex_less(VertexSet a, VertexSet b);

/// Undirected simple graph on vertices 0..order-1, order at most 16.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  Graph(int order, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return order_; }
  VertexSet vertices() const { return full_set(order_); }

  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1u; }
  VertexSet neighbors(int v) const { return rows_[v]; }
  int degree(int v) const { return std::popcount(static_cast<unsigned>(rows_[v])); }
  int edge_count() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  Graph complement() const;

  /// `image[v]` is the new label of vertex v.
  Graph relabeled(std::span<const int> image) const;

  std::span<const std::uint16_t> rows() const { return {rows_.data(), static_cast<std::size_t>(order_)}; }

  bool operator==(const Graph& other) const = default;

 private:
  void check_vertex(int v) const;

  int order_ = 0;
  std::array<std::uint16_t, kMaxOrder> rows_{};
};

/// Bijection on 0..n-1; `p(v)` is the image of v.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int v) const { return image_[v]; }
  VertexSet apply(VertexSet s) const;
  std::span<const int> image() const { return image_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// (a * b)(v) = a(b(v))
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> image_;
};

bool is_automorphism(const Graph& g, const Permutation& p);

struct InducedSubgraph {
  Graph graph;
  /// to_parent[i] is the parent vertex that became vertex i.
  std::vector<int> to_parent;
};

/// Throws std::invalid_argument on an empty or out-of-range subset.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);
Graph induced(const Graph& g, VertexSet s);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
std::vector<VertexSet> components(const Graph& g);

inline constexpr int kUnreachable = -1;

/// All-pairs BFS distances inside the subgraph induced by `allowed`.
std::vector<std::vector<int>> distances(const Graph& g, VertexSet allowed);
std::vector<std::vector<int>> distances(const Graph& g);

namespace graphs {
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph empty(int n);
Graph star(int leaves);
/// Triangle 0-1-2 with pendant 3 attached to 0.
Graph paw();
}  // namespace graphs

}  // namespace recon

#endif  // RECON_GRAPH_HPP
