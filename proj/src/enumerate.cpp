#include "recon/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace recon {

namespace {

std::vector<CanonicalKey> sorted(const std::unordered_set<CanonicalKey, CanonicalKeyHash>& seen) {
  std::vector<CanonicalKey> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

Graph with_new_vertex(const Graph& base, VertexSet attach) {
  Graph g(base.order() + 1);
  for (int u = 0; u < base.order(); ++u)
    for (VertexSet s = base.neighbors(u) & ~full_set(u + 1); s; s &= s - 1) g.add_edge(u, lowest(s));
  for (VertexSet s = attach; s; s &= s - 1) g.add_edge(base.order(), lowest(s));
  return g;
}

}  // namespace

std::vector<CanonicalKey> graph_classes(int n) {
  if (n < 0 || n > kMaxOrder) throw std::invalid_argument("graph_classes: order out of range");
  if (n <= 1) return {canonical_key(Graph(n))};
  std::unordered_set<CanonicalKey, CanonicalKeyHash> seen;
  for (const auto& smaller : graph_classes(n - 1)) {
    const Graph base = smaller.graph();
    for (VertexSet attach = 0; attach < bit(n - 1); ++attach) seen.insert(canonical_key(with_new_vertex(base, attach)));
  }
  return sorted(seen);
}

std::vector<CanonicalKey> tree_classes(int n) {
  if (n < 1 || n > kMaxOrder) throw std::invalid_argument("tree_classes: order out of range");
  if (n == 1) return {canonical_key(Graph(1))};
  std::unordered_set<CanonicalKey, CanonicalKeyHash> seen;
  for (const auto& smaller : tree_classes(n - 1)) {
    const Graph base = smaller.graph();
    // Attaching a leaf to vertices of one orbit gives isomorphic trees.
    for (VertexSet orbit : orbits(base).classes) seen.insert(canonical_key(with_new_vertex(base, bit(lowest(orbit)))));
  }
  return sorted(seen);
}

}  // namespace recon
