#ifndef RECON_CERTIFY_HPP
#define RECON_CERTIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "recon/anchor.hpp"
#include "recon/oracle.hpp"

namespace recon {

enum class CertificateKind {
  vertex_transitive,
  disconnected,
  orbit_anchor,
  asymmetric_n2,
  fixed_neighborhood_n2,
  small_aut_orbit2,
  distance_anchor,
  tree_leaf_pair,
  tree_internal,
  unknown,
};

const char* to_string(CertificateKind kind);
std::optional<CertificateKind> certificate_kind_from_string(std::string_view name);

/// One joint placement class of the two removed vertices' attachments, with
/// the first attachment held fixed: `placement` is the second vertex's
/// attachment set (anchor coordinates) and `distance` the length of the
/// shortest path between the two vertices through the anchor, or -1.
struct PlacementDistance {
  VertexSet placement = 0;
  int distance = -1;
  bool realized = false;

  bool operator==(const PlacementDistance&) const = default;
};

struct Witness {
  /// Anchor vertex set, in graph coordinates.
  VertexSet anchor = 0;
  /// Vertices outside the anchor (an orbit, or the removed pair).
  VertexSet removed = 0;
  AnchorKind anchor_kind = AnchorKind::structural;
  /// FixedNeighborhoodN2: removed vertex whose anchor neighbourhood every
  /// anchor automorphism fixes. TreeInternal: the outside vertex whose
  /// deletion leaves a vertex-transitive shadow graph (-1 if none needed).
  int pivot = -1;
  /// Disconnected: set when the complement, not the graph, is disconnected.
  bool complemented = false;
  std::vector<PlacementDistance> placements;
  /// Anchors visited by the extension loop that led here.
  std::vector<VertexSet> chain;

  bool operator==(const Witness&) const = default;
};

struct Certificate {
  CertificateKind kind = CertificateKind::unknown;
  Witness witness;

  bool operator==(const Certificate&) const = default;
};

std::optional<Certificate> certify_orbit_anchor(const Graph& g);
std::optional<Certificate> certify_asymmetric_n2(const Graph& g);
std::optional<Certificate> certify_fixed_neighborhood_n2(const Graph& g);
std::optional<Certificate> certify_small_aut_orbit2(const Graph& g);
std::optional<Certificate> certify_distance_anchor(const Graph& g);

/// Tree pipeline starting from the internal vertices. Throws
/// std::invalid_argument for non-trees and trees with fewer than 3 vertices.
Certificate certify_tree(const Graph& t);

/// Fixed pipeline: vertex-transitive, disconnected, trees, then the anchor
/// extension loop with the orbit and (n-2)-anchor certificates, then full
/// sweeps of each certificate. Returns kind unknown when nothing applies.
Certificate certify(const Graph& g);

/// Re-runs the predicate of c.kind on c.witness.
bool check_witness(const Graph& g, const Certificate& c);

/// Placement classes for the pair outside `anchor` (the first member is
/// held fixed). Empty unless exactly two vertices lie outside.
std::vector<PlacementDistance> placement_distances(const Graph& g, VertexSet anchor);

struct Validation {
  bool predicate = false;
  bool oracle_checked = false;
  bool oracle_unique = false;

  bool ok() const { return predicate && (!oracle_checked || oracle_unique); }
};

/// Predicate re-check plus, when the order is within the oracle's range, a
/// check that the deck of g has exactly one reconstruction.
Validation validate_certificate_detailed(const Graph& g, const Certificate& c, ReconstructionOracle& oracle);
bool validate_certificate(const Graph& g, const Certificate& c);

}  // namespace recon

#endif  // RECON_CERTIFY_HPP
