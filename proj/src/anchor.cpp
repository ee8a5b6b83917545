#include "recon/anchor.hpp"

#include <algorithm>
#include <stdexcept>

#include "recon/shadow.hpp"

namespace recon {

const char* to_string(AnchorKind kind) {
  return kind == AnchorKind::structural ? "structural" : "connective";
}

const char* to_string(BalanceClass c) {
  switch (c) {
    case BalanceClass::vertex_transitive: return "vertex_transitive";
    case BalanceClass::balanced_not_vt: return "balanced_not_vt";
    case BalanceClass::quasi_balanced: return "quasi_balanced";
    case BalanceClass::has_small_anchor: return "anchored";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::structural: return "structural";
    case Verdict::connective: return "connective";
    case Verdict::not_anchor: return "not_anchor";
  }
  return "?";
}

// ---------------------------------------------------------------- census

SubgraphCensus::SubgraphCensus(const Graph& g) : g_(g), keys_(std::size_t{1} << g.order()) {
  for (VertexSet s = 1; s < keys_.size(); ++s) {
    keys_[s] = canonical_key(induced(g, s));
    ++counts_[keys_[s]];
  }
}

int SubgraphCensus::occurrences(VertexSet s) const {
  auto it = counts_.find(keys_.at(s));
  return it == counts_.end() ? 0 : it->second;
}

bool SubgraphCensus::is_structural(VertexSet s) const {
  return s != 0 && s != g_.vertices() && occurrences(s) == 1;
}

std::vector<VertexSet> SubgraphCensus::copies(VertexSet s) const {
  std::vector<VertexSet> out;
  for_each_subset_of_size(g_.vertices(), set_size(s), [&](VertexSet t) {
    if (keys_[t] == keys_[s]) out.push_back(t);
  });
  return out;
}

std::vector<AnchorWitness> SubgraphCensus::anchors(int k) const {
  std::vector<AnchorWitness> out;
  if (k < 1 || k >= g_.order()) return out;
  for_each_subset_of_size(g_.vertices(), k, [&](VertexSet s) {
    if (occurrences(s) == 1) out.push_back({s, AnchorKind::structural, keys_[s]});
  });
  return out;
}

std::vector<AnchorWitness> find_anchors(const Graph& g, int k) { return SubgraphCensus(g).anchors(k); }

// ---------------------------------------------------------------- balance

namespace {

// Sizes k (1..n-1) at which a structural anchor exists, as a bitmask.
std::uint32_t anchor_sizes(const SubgraphCensus& census) {
  const Graph& g = census.graph();
  std::uint32_t sizes = 0;
  for (VertexSet s = 1; s < g.vertices(); ++s)
    if (census.occurrences(s) == 1) sizes |= bit(set_size(s));
  return sizes;
}

}  // namespace

bool is_balanced(const Graph& g) { return anchor_sizes(SubgraphCensus(g)) == 0; }

bool is_quasi_balanced(const Graph& g) { return anchor_sizes(SubgraphCensus(g)) == bit(g.order() - 1); }

BalanceClass balance_class(const Graph& g) { return balance_class(SubgraphCensus(g)); }

BalanceClass balance_class(const SubgraphCensus& census) {
  const Graph& g = census.graph();
  if (is_vertex_transitive(g)) return BalanceClass::vertex_transitive;
  const std::uint32_t sizes = anchor_sizes(census);
  if (sizes == 0) return BalanceClass::balanced_not_vt;
  if (sizes == bit(g.order() - 1)) return BalanceClass::quasi_balanced;
  return BalanceClass::has_small_anchor;
}

// ---------------------------------------------------------------- connective anchors

Verdict connective_anchor_copies(const Graph& g, VertexSet s) { return connective_anchor_copies(SubgraphCensus(g), s); }

Verdict connective_anchor_copies(const SubgraphCensus& census, VertexSet s) {
  const Graph& g = census.graph();
  if (s == 0 || s == g.vertices() || (s & ~g.vertices())) {
    throw std::invalid_argument("connective_anchor_copies: need a proper nonempty subset");
  }
  if (census.occurrences(s) == 1) return Verdict::structural;
  const ShadowGraph own = build_shadow(g, s);
  for (VertexSet t : census.copies(s)) {
    if (t == s) continue;
    if (shadow_isomorphic(own, build_shadow(g, t))) return Verdict::not_anchor;
  }
  return Verdict::connective;
}

namespace {

struct ShadowSignature {
  std::vector<int> attachment_sizes;
  int shadow_edges = 0;
  bool operator==(const ShadowSignature&) const = default;
};

ShadowSignature signature(const Graph& g, VertexSet s) {
  ShadowSignature sig;
  const VertexSet rest = g.vertices() & ~s;
  for (VertexSet t = rest; t; t &= t - 1) {
    const int v = lowest(t);
    sig.attachment_sizes.push_back(set_size(g.neighbors(v) & s));
    sig.shadow_edges += set_size(g.neighbors(v) & rest);
  }
  std::sort(sig.attachment_sizes.begin(), sig.attachment_sizes.end());
  sig.shadow_edges /= 2;
  return sig;
}

}  // namespace

bool is_distinguishable(const Graph& g, VertexSet s) {
  const VertexSet rest = g.vertices() & ~s;
  if (set_size(rest) < 2) return false;
  const CanonicalKey target = canonical_key(induced(g, s));
  for (int x : members(rest)) {
    const auto card = induced_subgraph(g, g.vertices() & ~bit(x));
    VertexSet local_s = 0;
    for (int i = 0; i < card.graph.order(); ++i)
      if (contains(s, card.to_parent[i])) local_s |= bit(i);
    const ShadowSignature own_sig = signature(card.graph, local_s);
    const ShadowGraph own_shadow = build_shadow(card.graph, local_s);
    bool ok = true;
    for_each_subset_of_size(card.graph.vertices(), set_size(local_s), [&](VertexSet t) {
      if (!ok || t == local_s) return;
      if (canonical_key(induced(card.graph, t)) != target) return;
      if (!(signature(card.graph, t) == own_sig)) return;
      if (!shadow_isomorphic(own_shadow, build_shadow(card.graph, t))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

std::vector<OrbitVerdict> orbit_removal_anchor(const Graph& g) {
  const OrbitPartition parts = orbits(g);
  if (parts.size() <= 1) throw std::invalid_argument("orbit_removal_anchor: graph is vertex-transitive");
  const SubgraphCensus census(g);
  std::vector<OrbitVerdict> out;
  for (VertexSet orbit : parts.classes) out.push_back({orbit, connective_anchor_copies(census, g.vertices() & ~orbit)});
  return out;
}

// ---------------------------------------------------------------- extension

std::vector<VertexSet> extension_chain(const SubgraphCensus& census, VertexSet seed) {
  const Graph& g = census.graph();
  if (!census.is_structural(seed)) throw std::invalid_argument("extension_chain: seed is not a structural anchor");
  std::vector<VertexSet> chain{seed};
  VertexSet current = seed;
  while (true) {
    const VertexSet rest = g.vertices() & ~current;
    VertexSet grown = 0;
    for (int a = 1; a < set_size(rest) && !grown; ++a) {
      for_each_subset_of_size(rest, a, [&](VertexSet add) {
        if (!grown && census.is_structural(current | add)) grown = current | add;
      });
    }
    if (!grown) return chain;
    current = grown;
    chain.push_back(current);
  }
}

AnchorWitness extend_to_maximal(const Graph& g, const AnchorWitness& seed) {
  const SubgraphCensus census(g);
  const VertexSet top = extension_chain(census, seed.vertices).back();
  return {top, AnchorKind::structural, census.key(top)};
}

std::vector<VertexSet> maximal_anchors(const SubgraphCensus& census) {
  const Graph& g = census.graph();
  std::vector<VertexSet> anchors;
  for (int k = 1; k < g.order(); ++k)
    for (const auto& w : census.anchors(k)) anchors.push_back(w.vertices);
  std::vector<VertexSet> out;
  for (VertexSet a : anchors) {
    const bool extendable = std::any_of(anchors.begin(), anchors.end(), [&](VertexSet b) {
      return b != a && (b & a) == a;
    });
    if (!extendable) out.push_back(a);
  }
  return out;
}

}  // namespace recon
