#include "recon/oracle.hpp"

#include <algorithm>

#include "recon/enumerate.hpp"

namespace recon {

std::uint64_t deck_hash(const Deck& deck) {
  std::uint64_t h = 0xcbf29ce484222325ull ^ static_cast<std::uint64_t>(deck.order());
  for (const auto& key : deck.signature()) {
    h ^= CanonicalKeyHash{}(key);
    h *= 0x100000001b3ull;
    h ^= h >> 29;
  }
  return h;
}

ReconstructionOracle::ReconstructionOracle(int max_order) : max_order_(max_order) {
  if (max_order < 3 || max_order > kMaxOrder) throw std::invalid_argument("oracle max order out of range");
}

const ReconstructionOracle::Index& ReconstructionOracle::index(int n) {
  if (n < 3 || n > max_order_) {
    throw OracleRangeError("oracle: order " + std::to_string(n) + " outside 3.." + std::to_string(max_order_));
  }
  std::lock_guard lock(mutex_);
  auto it = indexes_.find(n);
  if (it != indexes_.end()) return it->second;
  Index idx;
  idx.classes = graph_classes(n);
  idx.by_deck.reserve(idx.classes.size());
  for (std::uint32_t i = 0; i < idx.classes.size(); ++i) idx.by_deck.emplace(deck_hash(deck_of(idx.classes[i].graph())), i);
  return indexes_.emplace(n, std::move(idx)).first->second;
}

const std::vector<CanonicalKey>& ReconstructionOracle::classes(int n) { return index(n).classes; }

OracleVerdict ReconstructionOracle::reconstruct(const Deck& deck) {
  const Index& idx = index(deck.order());
  OracleVerdict verdict;
  const auto [first, last] = idx.by_deck.equal_range(deck_hash(deck));
  for (auto it = first; it != last; ++it) {
    const CanonicalKey& key = idx.classes[it->second];
    if (decks_equal(deck_of(key.graph()), deck)) verdict.matches.push_back(key);
  }
  std::sort(verdict.matches.begin(), verdict.matches.end());
  return verdict;
}

ReconstructionOracle& shared_oracle() {
  static ReconstructionOracle oracle(ReconstructionOracle::kDefaultMaxOrder);
  return oracle;
}

OracleVerdict oracle_reconstruct(const Deck& deck) { return shared_oracle().reconstruct(deck); }

}  // namespace recon
