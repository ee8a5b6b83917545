#include "recon/certify.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include "recon/shadow.hpp"

namespace recon {

const char* to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::vertex_transitive: return "VertexTransitive";
    case CertificateKind::disconnected: return "Disconnected";
    case CertificateKind::orbit_anchor: return "OrbitAnchor";
    case CertificateKind::asymmetric_n2: return "AsymmetricN2";
    case CertificateKind::fixed_neighborhood_n2: return "FixedNeighborhoodN2";
    case CertificateKind::small_aut_orbit2: return "SmallAutOrbit2";
    case CertificateKind::distance_anchor: return "DistanceAnchor";
    case CertificateKind::tree_leaf_pair: return "TreeLeafPair";
    case CertificateKind::tree_internal: return "TreeInternal";
    case CertificateKind::unknown: return "Unknown";
  }
  return "?";
}

std::optional<CertificateKind> certificate_kind_from_string(std::string_view name) {
  for (int k = 0; k <= static_cast<int>(CertificateKind::unknown); ++k) {
    const auto kind = static_cast<CertificateKind>(k);
    if (name == to_string(kind)) return kind;
  }
  return std::nullopt;
}

namespace {

struct Context {
  explicit Context(const Graph& graph) : g(graph), census(graph), parts(orbits(graph)) {}

  bool is_orbit(VertexSet r) const { return r != 0 && parts.orbit_of(lowest(r)) == r; }
  VertexSet complement(VertexSet s) const { return g.vertices() & ~s; }

  const Graph& g;
  SubgraphCensus census;
  OrbitPartition parts;
};

bool injective(const std::vector<PlacementDistance>& table) {
  std::set<int> seen;
  for (const auto& p : table)
    if (!seen.insert(p.distance).second) return false;
  return !table.empty();
}

// The anchor is structural, or a connective anchor that can be located in the deck.
bool anchor_kind_holds(const Context& ctx, VertexSet anchor, AnchorKind kind) {
  if (anchor == 0 || anchor == ctx.g.vertices()) return false;
  const Verdict verdict = connective_anchor_copies(ctx.census, anchor);
  if (kind == AnchorKind::structural) return verdict == Verdict::structural;
  return verdict == Verdict::connective && is_distinguishable(ctx.g, anchor);
}

bool structural_pair(const Context& ctx, const Witness& w) {
  return set_size(w.removed) == 2 && w.anchor == ctx.complement(w.removed) && w.anchor_kind == AnchorKind::structural &&
         ctx.census.is_structural(w.anchor);
}

bool is_abelian(const std::vector<Permutation>& group) {
  for (const auto& a : group)
    for (const auto& b : group)
      if (a * b != b * a) return false;
  return true;
}

bool small_group(const std::vector<Permutation>& group) {
  switch (group.size()) {
    case 1:
    case 2:
    case 3: return true;
    case 6: return !is_abelian(group);  // D3, not Z6
    default: return false;
  }
}

bool pivot_fixed(const Graph& g, VertexSet anchor, int pivot) {
  const BuiltShadow built = build_shadow_mapped(g, anchor);
  const auto it = std::find(built.outside.begin(), built.outside.end(), pivot);
  if (it == built.outside.end()) return false;
  return is_fixed_shadow_vertex(built.shadow, static_cast<int>(it - built.outside.begin()));
}

bool check_orbit_anchor(const Context& ctx, const Witness& w) {
  return set_size(w.removed) >= 3 && ctx.is_orbit(w.removed) && w.anchor == ctx.complement(w.removed) &&
         anchor_kind_holds(ctx, w.anchor, w.anchor_kind);
}

bool check_asymmetric(const Context& ctx, const Witness& w) {
  return structural_pair(ctx, w) && automorphisms(induced(ctx.g, w.anchor)).size() == 1;
}

bool check_fixed_neighborhood(const Context& ctx, const Witness& w) {
  return structural_pair(ctx, w) && w.pivot >= 0 && contains(w.removed, w.pivot) &&
         pivot_fixed(ctx.g, w.anchor, w.pivot);
}

bool check_small_aut(const Context& ctx, const Witness& w) {
  return structural_pair(ctx, w) && ctx.is_orbit(w.removed) && small_group(automorphisms(induced(ctx.g, w.anchor)));
}

bool check_distance(const Context& ctx, const Witness& w) {
  return structural_pair(ctx, w) && w.placements == placement_distances(ctx.g, w.anchor) && injective(w.placements);
}

bool check_tree_leaf_pair(const Context& ctx, const Witness& w) {
  if (!is_tree(ctx.g) || set_size(w.removed) != 2 || w.anchor != ctx.complement(w.removed)) return false;
  for (int v : members(w.removed))
    if (ctx.g.degree(v) != 1) return false;
  return anchor_kind_holds(ctx, w.anchor, w.anchor_kind) && w.placements == placement_distances(ctx.g, w.anchor) &&
         injective(w.placements);
}

// Shadow graph over the anchor is vertex-transitive, or becomes so once the
// pivot's shadow vertex is deleted.
bool shadow_transitive_after(const Graph& g, VertexSet anchor, int pivot) {
  const BuiltShadow built = build_shadow_mapped(g, anchor);
  if (pivot < 0) return is_shadow_vertex_transitive(built.shadow);
  const auto it = std::find(built.outside.begin(), built.outside.end(), pivot);
  if (it == built.outside.end()) return false;
  const int i = static_cast<int>(it - built.outside.begin());
  return is_shadow_vertex_transitive(built.shadow.sub(full_set(built.shadow.size()) & ~bit(i)));
}

bool check_tree_internal(const Context& ctx, const Witness& w) {
  return is_tree(ctx.g) && set_size(w.removed) >= 3 && w.anchor == ctx.complement(w.removed) &&
         anchor_kind_holds(ctx, w.anchor, w.anchor_kind) && (w.pivot < 0 || contains(w.removed, w.pivot)) &&
         shadow_transitive_after(ctx.g, w.anchor, w.pivot);
}

bool check_disconnected(const Graph& g, const Witness& w) {
  return !is_connected(w.complemented ? g.complement() : g);
}

bool check(const Context& ctx, const Certificate& c) {
  const Witness& w = c.witness;
  switch (c.kind) {
    case CertificateKind::vertex_transitive: return ctx.parts.size() == 1;
    case CertificateKind::disconnected: return check_disconnected(ctx.g, w);
    case CertificateKind::orbit_anchor: return check_orbit_anchor(ctx, w);
    case CertificateKind::asymmetric_n2: return check_asymmetric(ctx, w);
    case CertificateKind::fixed_neighborhood_n2: return check_fixed_neighborhood(ctx, w);
    case CertificateKind::small_aut_orbit2: return check_small_aut(ctx, w);
    case CertificateKind::distance_anchor: return check_distance(ctx, w);
    case CertificateKind::tree_leaf_pair: return check_tree_leaf_pair(ctx, w);
    case CertificateKind::tree_internal: return check_tree_internal(ctx, w);
    case CertificateKind::unknown: return false;
  }
  return false;
}

Witness pair_witness(const Context& ctx, VertexSet pair) {
  Witness w;
  w.removed = pair;
  w.anchor = ctx.complement(pair);
  return w;
}

// ---------------------------------------------------------------- single certificates

std::optional<Certificate> orbit_anchor(const Context& ctx) {
  if (ctx.parts.size() <= 1) return std::nullopt;
  for (VertexSet orbit : ctx.parts.classes) {
    if (set_size(orbit) < 3) continue;
    Witness w;
    w.removed = orbit;
    w.anchor = ctx.complement(orbit);
    const Verdict verdict = connective_anchor_copies(ctx.census, w.anchor);
    if (verdict == Verdict::structural) return Certificate{CertificateKind::orbit_anchor, w};
    if (verdict == Verdict::connective && is_distinguishable(ctx.g, w.anchor)) {
      w.anchor_kind = AnchorKind::connective;
      return Certificate{CertificateKind::orbit_anchor, w};
    }
  }
  return std::nullopt;
}

std::optional<Certificate> asymmetric_for_pair(const Context& ctx, VertexSet pair) {
  Certificate c{CertificateKind::asymmetric_n2, pair_witness(ctx, pair)};
  if (check_asymmetric(ctx, c.witness)) return c;
  return std::nullopt;
}

std::optional<Certificate> fixed_for_pair(const Context& ctx, VertexSet pair) {
  Certificate c{CertificateKind::fixed_neighborhood_n2, pair_witness(ctx, pair)};
  if (!structural_pair(ctx, c.witness)) return std::nullopt;
  for (int pivot : members(pair)) {
    c.witness.pivot = pivot;
    if (pivot_fixed(ctx.g, c.witness.anchor, pivot)) return c;
  }
  return std::nullopt;
}

std::optional<Certificate> small_aut_for_pair(const Context& ctx, VertexSet pair) {
  Certificate c{CertificateKind::small_aut_orbit2, pair_witness(ctx, pair)};
  if (check_small_aut(ctx, c.witness)) return c;
  return std::nullopt;
}

std::optional<Certificate> distance_for_pair(const Context& ctx, VertexSet pair) {
  Certificate c{CertificateKind::distance_anchor, pair_witness(ctx, pair)};
  if (!structural_pair(ctx, c.witness)) return std::nullopt;
  c.witness.placements = placement_distances(ctx.g, c.witness.anchor);
  if (injective(c.witness.placements)) return c;
  return std::nullopt;
}

template <typename PairCheck>
std::optional<Certificate> sweep_pairs(const Context& ctx, PairCheck&& check_pair) {
  std::optional<Certificate> found;
  for_each_subset_of_size(ctx.g.vertices(), 2, [&](VertexSet pair) {
    if (!found) found = check_pair(ctx, pair);
  });
  return found;
}

std::optional<Certificate> pair_certificates(const Context& ctx, VertexSet pair) {
  if (auto c = asymmetric_for_pair(ctx, pair)) return c;
  if (auto c = fixed_for_pair(ctx, pair)) return c;
  if (auto c = small_aut_for_pair(ctx, pair)) return c;
  if (auto c = distance_for_pair(ctx, pair)) return c;
  return std::nullopt;
}

// Extension loop from the smallest structural anchor, then full sweeps.
std::optional<Certificate> anchor_pipeline(const Context& ctx) {
  const int n = ctx.g.order();
  for (int k = 1; k < n; ++k) {
    const auto seeds = ctx.census.anchors(k);
    if (seeds.empty()) continue;
    const auto chain = extension_chain(ctx.census, seeds.front().vertices);
    for (std::size_t step = 0; step < chain.size(); ++step) {
      const VertexSet rest = ctx.complement(chain[step]);
      std::optional<Certificate> c;
      if (set_size(rest) >= 3 && ctx.is_orbit(rest)) {
        Witness w;
        w.anchor = chain[step];
        w.removed = rest;
        c = Certificate{CertificateKind::orbit_anchor, w};
      } else if (set_size(rest) == 2) {
        c = pair_certificates(ctx, rest);
      }
      if (c) {
        c->witness.chain.assign(chain.begin(), chain.begin() + static_cast<long>(step) + 1);
        return c;
      }
    }
    break;
  }
  if (auto c = orbit_anchor(ctx)) return c;
  if (auto c = sweep_pairs(ctx, asymmetric_for_pair)) return c;
  if (auto c = sweep_pairs(ctx, fixed_for_pair)) return c;
  if (auto c = sweep_pairs(ctx, small_aut_for_pair)) return c;
  if (auto c = sweep_pairs(ctx, distance_for_pair)) return c;
  return std::nullopt;
}

std::optional<Certificate> tree_stop(const Context& ctx, VertexSet anchor, AnchorKind kind,
                                     const std::vector<VertexSet>& chain) {
  Witness w;
  w.anchor = anchor;
  w.removed = ctx.complement(anchor);
  w.anchor_kind = kind;
  w.chain = chain;
  const int outside = set_size(w.removed);
  if (outside == 2) {
    w.placements = placement_distances(ctx.g, anchor);
    if (injective(w.placements)) return Certificate{CertificateKind::tree_leaf_pair, w};
    w.placements.clear();
  }
  if (outside >= 3 && ctx.is_orbit(w.removed)) return Certificate{CertificateKind::orbit_anchor, w};
  if (outside >= 3 && is_shadow_vertex_transitive(build_shadow(ctx.g, anchor))) {
    return Certificate{CertificateKind::tree_internal, w};
  }
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------- placements

std::vector<PlacementDistance> placement_distances(const Graph& g, VertexSet anchor) {
  const VertexSet rest = g.vertices() & ~anchor;
  if (set_size(rest) != 2 || anchor == 0) return {};
  const auto pair = members(rest);
  const auto sub = induced_subgraph(g, anchor);
  const Graph& h = sub.graph;
  std::array<int, kMaxOrder> local{};
  for (int i = 0; i < h.order(); ++i) local[sub.to_parent[i]] = i;
  auto to_local = [&](VertexSet s) {
    VertexSet out = 0;
    for (VertexSet t = s & anchor; t; t &= t - 1) out |= bit(local[lowest(t)]);
    return out;
  };
  auto to_parent = [&](VertexSet s) {
    VertexSet out = 0;
    for (VertexSet t = s; t; t &= t - 1) out |= bit(sub.to_parent[lowest(t)]);
    return out;
  };

  const VertexSet first = to_local(g.neighbors(pair[0]));
  const VertexSet second = to_local(g.neighbors(pair[1]));
  const auto auts = automorphisms(h);
  const auto dist = distances(h);

  std::set<VertexSet> images;
  for (const auto& theta : auts) images.insert(theta.apply(second));
  // Orbits of the second attachment's images under the stabilizer of the first.
  std::vector<VertexSet> pending(images.begin(), images.end());
  std::vector<std::set<VertexSet>> classes;
  std::set<VertexSet> assigned;
  for (VertexSet b : pending) {
    if (assigned.count(b)) continue;
    std::set<VertexSet> cls;
    for (const auto& theta : auts)
      if (theta.apply(first) == first) cls.insert(theta.apply(b));
    assigned.insert(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }

  std::vector<PlacementDistance> table;
  for (const auto& cls : classes) {
    const VertexSet rep = *cls.begin();
    int best = -1;
    for (int a : members(first)) {
      for (int b : members(rep)) {
        if (dist[a][b] == kUnreachable) continue;
        const int d = dist[a][b] + 2;
        if (best < 0 || d < best) best = d;
      }
    }
    table.push_back({to_parent(rep), best, cls.count(second) > 0});
  }
  std::sort(table.begin(), table.end(), [](const auto& x, const auto& y) { return x.placement < y.placement; });
  return table;
}

// ---------------------------------------------------------------- public certificates

std::optional<Certificate> certify_orbit_anchor(const Graph& g) { return orbit_anchor(Context(g)); }

std::optional<Certificate> certify_asymmetric_n2(const Graph& g) { return sweep_pairs(Context(g), asymmetric_for_pair); }

std::optional<Certificate> certify_fixed_neighborhood_n2(const Graph& g) { return sweep_pairs(Context(g), fixed_for_pair); }

std::optional<Certificate> certify_small_aut_orbit2(const Graph& g) { return sweep_pairs(Context(g), small_aut_for_pair); }

std::optional<Certificate> certify_distance_anchor(const Graph& g) { return sweep_pairs(Context(g), distance_for_pair); }

Certificate certify_tree(const Graph& t) {
  if (t.order() < 3 || !is_tree(t)) throw std::invalid_argument("certify_tree: input is not a tree with at least 3 vertices");
  const Context ctx(t);
  VertexSet internal = 0;
  for (int v = 0; v < t.order(); ++v)
    if (t.degree(v) > 1) internal |= bit(v);

  std::optional<AnchorKind> kind;
  const Verdict verdict = connective_anchor_copies(ctx.census, internal);
  if (verdict == Verdict::structural) {
    kind = AnchorKind::structural;
  } else if (verdict == Verdict::connective && is_distinguishable(t, internal)) {
    kind = AnchorKind::connective;
  }

  std::vector<VertexSet> chain;
  if (kind) {
    VertexSet current = internal;
    chain.push_back(current);
    while (true) {
      if (auto c = tree_stop(ctx, current, chain.size() == 1 ? *kind : AnchorKind::structural, chain)) return *c;
      const VertexSet rest = ctx.complement(current);
      VertexSet grown = 0;
      for (int a = 1; a < set_size(rest) && !grown; ++a) {
        for_each_subset_of_size(rest, a, [&](VertexSet add) {
          if (!grown && ctx.census.is_structural(current | add)) grown = current | add;
        });
      }
      if (!grown) break;
      current = grown;
      chain.push_back(current);
    }
    // Dead end: step back to the last anchor with room outside and look for a
    // shadow vertex whose deletion leaves a vertex-transitive shadow graph.
    for (auto step = chain.size(); step-- > 0;) {
      const VertexSet rest = ctx.complement(chain[step]);
      if (set_size(rest) < 3) continue;
      Witness w;
      w.anchor = chain[step];
      w.removed = rest;
      w.anchor_kind = step == 0 ? *kind : AnchorKind::structural;
      w.chain.assign(chain.begin(), chain.begin() + static_cast<long>(step) + 1);
      for (int pivot : members(rest)) {
        w.pivot = pivot;
        if (shadow_transitive_after(t, w.anchor, pivot)) return {CertificateKind::tree_internal, w};
      }
      break;
    }
  }
  if (auto c = anchor_pipeline(ctx)) return *c;
  Certificate unknown;
  unknown.witness.chain = chain;
  return unknown;
}

Certificate certify(const Graph& g) {
  if (g.order() < 3) throw std::invalid_argument("certify: graphs need at least three vertices");
  if (is_vertex_transitive(g)) return {CertificateKind::vertex_transitive, {}};
  if (!is_connected(g)) return {CertificateKind::disconnected, {}};
  if (is_tree(g)) return certify_tree(g);
  if (!is_connected(g.complement())) {
    Certificate c{CertificateKind::disconnected, {}};
    c.witness.complemented = true;
    return c;
  }
  const Context ctx(g);
  if (auto c = anchor_pipeline(ctx)) return *c;
  return {};
}

bool check_witness(const Graph& g, const Certificate& c) {
  if (g.order() < 3) return false;
  return check(Context(g), c);
}

Validation validate_certificate_detailed(const Graph& g, const Certificate& c, ReconstructionOracle& oracle) {
  Validation v;
  v.predicate = c.kind != CertificateKind::unknown && check_witness(g, c);
  if (g.order() >= 3 && g.order() <= oracle.max_order()) {
    v.oracle_checked = true;
    const OracleVerdict verdict = oracle.reconstruct(deck_of(g));
    v.oracle_unique = verdict.unique() && verdict.matches.front() == canonical_key(g);
  }
  return v;
}

bool validate_certificate(const Graph& g, const Certificate& c) {
  return validate_certificate_detailed(g, c, shared_oracle()).ok();
}

}  // namespace recon
