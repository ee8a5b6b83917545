#include "recon/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>

namespace recon {

std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  out.reserve(set_size(s));
  for (; s; s &= s - 1) out.push_back(lowest(s));
  return out;
}

VertexSet make_set(std::initializer_list<int> vertices) {
  return make_set(std::span<const int>(vertices.begin(), vertices.size()));
}

VertexSet make_set(std::span<const int> vertices) {
  VertexSet s = 0;
  for (int v : vertices) s |= bit(v);
  return s;
}

bool lex_less(VertexSet a, VertexSet b) {
  const auto ma = members(a);
  const auto mb = members(b);
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

// ---------------------------------------------------------------- Graph

Graph::Graph(int order) : order_(order) {
  if (order < 0 || order > kMaxOrder) {
    throw std::invalid_argument("graph order " + std::to_string(order) + " outside 0.." +
                                std::to_string(kMaxOrder));
  }
}

Graph::Graph(int order, std::initializer_list<std::pair<int, int>> edges) : Graph(order) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < order_; ++v) twice += degree(v);
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  rows_[u] |= static_cast<std::uint16_t>(bit(v));
  rows_[v] |= static_cast<std::uint16_t>(bit(u));
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  rows_[u] &= static_cast<std::uint16_t>(~bit(v));
  rows_[v] &= static_cast<std::uint16_t>(~bit(u));
}

Graph Graph::complement() const {
  Graph c(order_);
  const VertexSet all = vertices();
  for (int v = 0; v < order_; ++v) c.rows_[v] = static_cast<std::uint16_t>(all & ~rows_[v] & ~bit(v));
  return c;
}

Graph Graph::relabeled(std::span<const int> image) const {
  if (static_cast<int>(image.size()) != order_) throw std::invalid_argument("relabeling has wrong size");
  Graph out(order_);
  for (int u = 0; u < order_; ++u) {
    VertexSet row = 0;
    for (VertexSet s = rows_[u]; s; s &= s - 1) row |= bit(image[lowest(s)]);
    out.rows_[image[u]] = static_cast<std::uint16_t>(row);
  }
  return out;
}

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 0 || v >= size() || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

VertexSet Permutation::apply(VertexSet s) const {
  VertexSet out = 0;
  for (; s; s &= s - 1) out |= bit(image_[lowest(s)]);
  return out;
}

bool Permutation::is_identity() const {
  for (int v = 0; v < size(); ++v)
    if (image_[v] != v) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int v = 0; v < size(); ++v) inv[image_[v]] = v;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("composing permutations of different sizes");
  std::vector<int> image(a.size());
  for (int v = 0; v < a.size(); ++v) image[v] = a(b(v));
  return Permutation(std::move(image));
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.size() != g.order()) return false;
  for (int v = 0; v < g.order(); ++v)
    if (p.apply(g.neighbors(v)) != g.neighbors(p(v))) return false;
  return true;
}

// ---------------------------------------------------------------- subgraphs

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  if (s == 0) throw std::invalid_argument("induced subgraph of an empty vertex set");
  if (s & ~g.vertices()) throw std::invalid_argument("vertex set exceeds graph order");
  InducedSubgraph out{Graph(set_size(s)), members(s)};
  for (int i = 0; i < out.graph.order(); ++i)
    for (int j = i + 1; j < out.graph.order(); ++j)
      if (g.adjacent(out.to_parent[i], out.to_parent[j])) out.graph.add_edge(i, j);
  return out;
}

Graph induced(const Graph& g, VertexSet s) { return induced_subgraph(g, s).graph; }

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (unseen) {
    VertexSet comp = bit(lowest(unseen));
    VertexSet frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f; f &= f - 1) next |= g.neighbors(lowest(f));
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || components(g).size() == 1; }

bool is_tree(const Graph& g) { return g.order() >= 1 && g.edge_count() == g.order() - 1 && is_connected(g); }

std::vector<std::vector<int>> distances(const Graph& g, VertexSet allowed) {
  const int n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kUnreachable));
  for (int src = 0; src < n; ++src) {
    if (!contains(allowed, src)) continue;
    d[src][src] = 0;
    std::deque<int> queue{src};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (VertexSet s = g.neighbors(u) & allowed; s; s &= s - 1) {
        const int w = lowest(s);
        if (d[src][w] == kUnreachable) {
          d[src][w] = d[src][u] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return d;
}

std::vector<std::vector<int>> distances(const Graph& g) { return distances(g, g.vertices()); }

namespace graphs {

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(int n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph complete(int n) { return Graph(n).complement(); }

Graph empty(int n) { return Graph(n); }

Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph paw() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}); }

}  // namespace graphs

}  // namespace recon
