#ifndef RECON_CANONICAL_HPP
#define RECON_CANONICAL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "recon/graph.hpp"

namespace recon {

/// Adjacency rows of the canonically relabeled graph. Two graphs have equal
/// keys exactly when they are isomorphic.
struct CanonicalKey {
  std::uint8_t order = 0;
  std::array<std::uint16_t, kMaxOrder> rows{};

  auto operator<=>(const CanonicalKey&) const = default;

  Graph graph() const;
  /// Fixed serialization: the order byte followed by each row, big-endian.
  std::string hex() const;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const noexcept;
};

struct CanonicalLabeling {
  CanonicalKey key;
  /// order[i] is the input vertex placed at canonical position i.
  std::vector<int> order;
};

CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalKey canonical_key(const Graph& g);

/// Canonical form of a vertex-colored graph; equal forms iff a
/// color-preserving isomorphism exists.
struct ColoredForm {
  std::vector<std::uint32_t> colors;
  CanonicalKey key;

  auto operator<=>(const ColoredForm&) const = default;
};

ColoredForm colored_canonical_form(const Graph& g, std::span<const std::uint32_t> colors);

/// Return false from the visitor to stop the search.
using IsomorphismVisitor = std::function<bool(const Permutation&)>;

/// Enumerates every isomorphism g -> h (optionally color-preserving). Each
/// permutation p satisfies adjacent(u, v) in g iff adjacent(p(u), p(v)) in h.
void for_each_isomorphism(const Graph& g, const Graph& h, const IsomorphismVisitor& visit);
void for_each_isomorphism(const Graph& g, std::span<const std::uint32_t> g_colors, const Graph& h,
                          std::span<const std::uint32_t> h_colors, const IsomorphismVisitor& visit);

std::optional<Permutation> find_isomorphism(const Graph& g, const Graph& h);
bool isomorphic(const Graph& g, const Graph& h);

std::vector<Permutation> automorphisms(const Graph& g);
std::vector<Permutation> automorphisms(const Graph& g, std::span<const std::uint32_t> colors);

/// Some automorphism maps u to v.
bool similar(const Graph& g, int u, int v);

struct OrbitPartition {
  /// Sorted by smallest member.
  std::vector<VertexSet> classes;

  int class_of(int v) const;
  VertexSet orbit_of(int v) const { return classes[class_of(v)]; }
  std::size_t size() const { return classes.size(); }
};

OrbitPartition orbits(const Graph& g);
bool is_vertex_transitive(const Graph& g);

}  // namespace recon

#endif  // RECON_CANONICAL_HPP
