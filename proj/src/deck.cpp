#include "recon/deck.hpp"

#include <algorithm>
#include <charconv>

#include "recon/graph6.hpp"

namespace recon {

Deck::Deck(int order, std::vector<Graph> cards) : order_(order), cards_(std::move(cards)) {
  if (order < 2 || order > kMaxOrder) throw std::invalid_argument("deck order out of range");
  if (static_cast<int>(cards_.size()) != order) {
    throw std::invalid_argument("deck of order " + std::to_string(order) + " needs " + std::to_string(order) +
                                " cards, got " + std::to_string(cards_.size()));
  }
  keys_.reserve(cards_.size());
  for (const auto& card : cards_) {
    if (card.order() != order - 1) throw std::invalid_argument("card order differs from deck order - 1");
    keys_.push_back(canonical_key(card));
  }
}

std::map<CanonicalKey, int> Deck::multiset() const {
  std::map<CanonicalKey, int> out;
  for (const auto& k : keys_) ++out[k];
  return out;
}

std::vector<CanonicalKey> Deck::signature() const {
  auto out = keys_;
  std::sort(out.begin(), out.end());
  return out;
}

Deck deck_of(const Graph& g) {
  if (g.order() < 3) throw std::invalid_argument("deck_of: graphs need at least three vertices");
  std::vector<Graph> cards;
  cards.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) cards.push_back(induced(g, g.vertices() & ~bit(v)));
  return Deck(g.order(), std::move(cards));
}

bool decks_equal(const Deck& a, const Deck& b) { return a.order() == b.order() && a.signature() == b.signature(); }

std::int64_t direct_count(const Graph& h, const Graph& g) {
  const int k = h.order();
  if (k > g.order()) return 0;
  if (k == 0) return 1;
  const int edges = h.edge_count();
  const CanonicalKey target = canonical_key(h);
  std::int64_t count = 0;
  for_each_subset_of_size(g.vertices(), k, [&](VertexSet s) {
    int e = 0;
    for (VertexSet t = s; t; t &= t - 1) e += std::popcount(g.neighbors(lowest(t)) & s);
    if (e / 2 != edges) return;
    if (canonical_key(induced(g, s)) == target) ++count;
  });
  return count;
}

std::int64_t kelly_count(const Graph& h, const Deck& deck) {
  const int k = h.order();
  if (k > deck.order() - 1) throw std::invalid_argument("kelly_count: subgraph must have at most n-1 vertices");
  std::int64_t sum = 0;
  for (const auto& card : deck.cards()) sum += direct_count(h, card);
  // Each copy of h survives in exactly the n - k cards that avoid it.
  const std::int64_t divisor = deck.order() - k;
  if (sum % divisor != 0) {
    throw InconsistentDeck("kelly_count: card occurrence sum " + std::to_string(sum) + " not divisible by " +
                           std::to_string(divisor));
  }
  return sum / divisor;
}

Deck read_deck(std::istream& in) {
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      if (!line.empty()) return true;
    }
    return false;
  };
  if (!next_line() || !line.starts_with("n=")) throw DeckFormatError("deck: expected header line \"n=<order>\"");
  int order = 0;
  const char* first = line.data() + 2;
  const char* last = line.data() + line.size();
  auto [ptr, ec] = std::from_chars(first, last, order);
  if (ec != std::errc{} || ptr != last || first == last) throw DeckFormatError("deck: bad order in header: " + line);
  if (order < 3 || order > kMaxOrder) throw DeckFormatError("deck: order " + std::to_string(order) + " out of range");

  std::vector<Graph> cards;
  while (next_line()) {
    Graph card;
    try {
      card = parse_graph6(line);
    } catch (const Graph6Error& e) {
      throw DeckFormatError("deck: card " + std::to_string(cards.size() + 1) + ": " + e.what());
    }
    if (card.order() != order - 1) {
      throw DeckFormatError("deck: card " + std::to_string(cards.size() + 1) + " has order " +
                            std::to_string(card.order()) + ", expected " + std::to_string(order - 1));
    }
    cards.push_back(card);
  }
  if (static_cast<int>(cards.size()) != order) {
    throw DeckFormatError("deck: expected " + std::to_string(order) + " cards, found " + std::to_string(cards.size()));
  }
  return Deck(order, std::move(cards));
}

std::string write_deck(const Deck& deck) {
  std::string out = "n=" + std::to_string(deck.order()) + "\n";
  for (const auto& card : deck.cards()) out += write_graph6(card) + "\n";
  return out;
}

}  // namespace recon
