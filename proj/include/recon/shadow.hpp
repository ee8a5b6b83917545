#ifndef RECON_SHADOW_HPP
#define RECON_SHADOW_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "recon/canonical.hpp"

namespace recon {

/// A graph whose vertices are subsets of a background graph's vertex set.
/// Shadow edges are independent of the background edges, and two shadow
/// vertices may carry the same subset.
class ShadowGraph {
 public:
  ShadowGraph(Graph background, std::vector<VertexSet> vertices, Graph edges);

  const Graph& background() const { return background_; }
  const std::vector<VertexSet>& vertices() const { return vertices_; }
  VertexSet vertex(int i) const { return vertices_[i]; }
  int size() const { return static_cast<int>(vertices_.size()); }
  /// Shadow adjacency, on shadow-vertex indices.
  const Graph& edges() const { return edges_; }
  bool adjacent(int i, int j) const { return edges_.adjacent(i, j); }

  /// Keeps only the shadow vertices in `keep` (indices), same background.
  ShadowGraph sub(VertexSet keep) const;

  bool operator==(const ShadowGraph&) const = default;

 private:
  Graph background_;
  std::vector<VertexSet> vertices_;
  Graph edges_;
};

struct ShadowIso {
  /// Isomorphism between the backgrounds.
  Permutation background_map;
  /// vertex_map(i) is the shadow vertex of the target matched with i.
  Permutation vertex_map;
};

struct BuiltShadow {
  ShadowGraph shadow;
  /// Background vertex i is graph vertex anchor[i].
  std::vector<int> anchor;
  /// Shadow vertex i stands for graph vertex outside[i].
  std::vector<int> outside;
};

/// Background = g[anchor]; one shadow vertex N(v) ∩ anchor per v outside,
/// shadow edges copied from g. Throws on an empty or non-proper anchor.
BuiltShadow build_shadow_mapped(const Graph& g, VertexSet anchor);
ShadowGraph build_shadow(const Graph& g, VertexSet anchor);

/// Inverse of build_shadow: background vertices first, then one vertex per
/// shadow vertex.
Graph unbuild(const ShadowGraph& x);

std::optional<ShadowIso> shadow_isomorphic(const ShadowGraph& x, const ShadowGraph& y);
bool is_shadow_iso(const ShadowGraph& x, const ShadowGraph& y, const ShadowIso& iso);

std::vector<ShadowIso> shadow_automorphisms(const ShadowGraph& x);

/// Partition of shadow-vertex indices into similarity classes.
std::vector<VertexSet> shadow_orbits(const ShadowGraph& x);
bool is_shadow_vertex_transitive(const ShadowGraph& x);

/// Every background automorphism maps the subset of shadow vertex i to itself.
bool is_fixed_shadow_vertex(const ShadowGraph& x, int i);

/// Proper nonempty subsets of shadow vertices whose sub shadow graph has no
/// isomorphic twin among the other subsets of the same size. Twins are
/// related by an automorphism of the shared background.
std::vector<VertexSet> shadow_anchors(const ShadowGraph& x);

/// Canonical form of sub(keep) up to automorphisms of the background.
ColoredForm sub_shadow_form(const ShadowGraph& x, VertexSet keep, const std::vector<Permutation>& background_auts);

/// Card i deletes shadow vertex i.
std::vector<ShadowGraph> shadow_deck(const ShadowGraph& x);

class ShadowFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text form:
///   background <graph6>
///   vertex <i> <j> ...      one line per shadow vertex, background indices
///   edge <a> <b>            one line per shadow edge
std::string write_shadow(const ShadowGraph& x);
ShadowGraph parse_shadow(std::string_view text);

}  // namespace recon

#endif  // RECON_SHADOW_HPP
