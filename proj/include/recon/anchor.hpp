#ifndef RECON_ANCHOR_HPP
#define RECON_ANCHOR_HPP

#include <unordered_map>
#include <vector>

#include "recon/canonical.hpp"

namespace recon {

enum class AnchorKind { structural, connective };

/// Vertex subset of G inducing an anchor, with the canonical key of the
/// induced subgraph.
struct AnchorWitness {
  VertexSet vertices = 0;
  AnchorKind kind = AnchorKind::structural;
  CanonicalKey key;

  bool operator==(const AnchorWitness&) const = default;
};

enum class BalanceClass { vertex_transitive, balanced_not_vt, quasi_balanced, has_small_anchor };

enum class Verdict { structural, connective, not_anchor };

const char* to_string(AnchorKind kind);
const char* to_string(BalanceClass c);
const char* to_string(Verdict v);

/// Canonical keys of every induced subgraph of g, with occurrence counts.
/// Building it costs one canonical labeling per vertex subset.
class SubgraphCensus {
 public:
  explicit SubgraphCensus(const Graph& g);

  const Graph& graph() const { return g_; }
  const CanonicalKey& key(VertexSet s) const { return keys_[s]; }
  int occurrences(VertexSet s) const;
  bool is_structural(VertexSet s) const;
  /// Subsets inducing a graph isomorphic to g[s], including s, in lex order.
  std::vector<VertexSet> copies(VertexSet s) const;
  /// Structural anchors of size k, subsets in lexicographic order.
  std::vector<AnchorWitness> anchors(int k) const;

 private:
  Graph g_;
  std::vector<CanonicalKey> keys_;
  std::unordered_map<CanonicalKey, int, CanonicalKeyHash> counts_;
};

std::vector<AnchorWitness> find_anchors(const Graph& g, int k);

bool is_balanced(const Graph& g);
bool is_quasi_balanced(const Graph& g);
BalanceClass balance_class(const Graph& g);
BalanceClass balance_class(const SubgraphCensus& census);

/// structural if g[s] is unique; connective if copies exist but none has a
/// shadow graph isomorphic to the shadow graph over s; otherwise not_anchor.
Verdict connective_anchor_copies(const Graph& g, VertexSet s);
Verdict connective_anchor_copies(const SubgraphCensus& census, VertexSet s);

/// Conservative test that a connective anchor can be located in the deck: at
/// least two cards avoid s, and in each such card every copy of g[s] with the
/// same shadow signature (sorted attachment sizes, shadow edge count) as s is
/// an automorphic image of s within that card.
bool is_distinguishable(const Graph& g, VertexSet s);

struct OrbitVerdict {
  VertexSet orbit = 0;
  Verdict verdict = Verdict::not_anchor;
};

/// Verdict of g minus each orbit. Throws std::invalid_argument for
/// vertex-transitive g.
std::vector<OrbitVerdict> orbit_removal_anchor(const Graph& g);

/// Successive anchors from seed: each step adds the smallest set A (ties by
/// lex order) outside the current anchor whose union is a proper structural
/// anchor. The last element is maximal. Throws if the seed is not structural.
std::vector<VertexSet> extension_chain(const SubgraphCensus& census, VertexSet seed);
AnchorWitness extend_to_maximal(const Graph& g, const AnchorWitness& seed);

/// Structural anchors with no structural proper superset of size <= n-1.
std::vector<VertexSet> maximal_anchors(const SubgraphCensus& census);

}  // namespace recon

#endif  // RECON_ANCHOR_HPP
