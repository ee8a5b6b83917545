#ifndef RECON_ORACLE_HPP
#define RECON_ORACLE_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "recon/deck.hpp"

namespace recon {

struct OracleVerdict {
  /// Canonical keys of every graph whose deck equals the input, sorted.
  std::vector<CanonicalKey> matches;

  bool unique() const { return matches.size() == 1; }
  bool legitimate() const { return !matches.empty(); }
};

class OracleRangeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Brute-force reconstruction: every isomorphism class of the deck's order
/// is enumerated once, and classes are indexed by a hash of their deck.
class ReconstructionOracle {
 public:
  static constexpr int kDefaultMaxOrder = 9;

  explicit ReconstructionOracle(int max_order = kDefaultMaxOrder);

  int max_order() const { return max_order_; }
  OracleVerdict reconstruct(const Deck& deck);
  /// Classes of order n (builds the index on first use).
  const std::vector<CanonicalKey>& classes(int n);

 private:
  struct Index {
    std::vector<CanonicalKey> classes;
    std::unordered_multimap<std::uint64_t, std::uint32_t> by_deck;
  };
  const Index& index(int n);

  int max_order_;
  std::mutex mutex_;
  std::map<int, Index> indexes_;
};

std::uint64_t deck_hash(const Deck& deck);

/// Uses a shared oracle limited to order 9.
OracleVerdict oracle_reconstruct(const Deck& deck);
ReconstructionOracle& shared_oracle();

}  // namespace recon

#endif  // RECON_ORACLE_HPP
