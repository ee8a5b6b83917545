#ifndef RECON_DECK_HPP
#define RECON_DECK_HPP

#include <cstdint>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "recon/canonical.hpp"

namespace recon {

/// Multiset of one-vertex-deleted cards. A Deck built from a card list need
/// not come from any graph.
class Deck {
 public:
  /// Throws std::invalid_argument unless there are exactly `order` cards of
  /// order `order - 1`.
  Deck(int order, std::vector<Graph> cards);

  int order() const { return order_; }
  const std::vector<Graph>& cards() const { return cards_; }
  const std::vector<CanonicalKey>& card_keys() const { return keys_; }
  /// Card key -> multiplicity.
  std::map<CanonicalKey, int> multiset() const;
  /// Card keys in sorted order; equal for two decks iff their multisets agree.
  std::vector<CanonicalKey> signature() const;

 private:
  int order_;
  std::vector<Graph> cards_;
  std::vector<CanonicalKey> keys_;
};

/// Card i is g with vertex i deleted. Requires order >= 3.
Deck deck_of(const Graph& g);
bool decks_equal(const Deck& a, const Deck& b);

/// Thrown when card occurrence sums are not divisible as a real deck requires.
class InconsistentDeck : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Number of vertex subsets of g inducing a copy of h.
std::int64_t direct_count(const Graph& h, const Graph& g);

/// Kelly's Lemma: occurrences of h in the hidden graph, from the deck alone.
std::int64_t kelly_count(const Graph& h, const Deck& deck);

/// Deck file: a line "n=<order>" followed by n graph6 lines, one per card.
class DeckFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Deck read_deck(std::istream& in);
std::string write_deck(const Deck& deck);

}  // namespace recon

#endif  // RECON_DECK_HPP
