#ifndef RECON_ENUMERATE_HPP
#define RECON_ENUMERATE_HPP

#include <vector>

#include "recon/canonical.hpp"

namespace recon {

/// One representative per isomorphism class of graphs of order n, built by
/// adding a vertex in every way to each class of order n-1 and deduplicating
/// by canonical key. Sorted by key.
std::vector<CanonicalKey> graph_classes(int n);

/// Free trees of order n (leaf augmentation, canonically deduplicated), sorted by key.
std::vector<CanonicalKey> tree_classes(int n);

}  // namespace recon

#endif  // RECON_ENUMERATE_HPP
