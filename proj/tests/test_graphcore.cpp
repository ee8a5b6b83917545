#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "recon/canonical.hpp"
#include "recon/enumerate.hpp"
#include "recon/graph6.hpp"

using namespace recon;

namespace {

Graph reversed(const Graph& g) {
  std::vector<int> image(g.order());
  for (int v = 0; v < g.order(); ++v) image[v] = g.order() - 1 - v;
  return g.relabeled(image);
}

Graph6Errc parse_error(std::string_view text) {
  try {
    parse_graph6(text);
  } catch (const Graph6Error& e) {
    return e.code();
  }
  FAIL("no error for " << text);
  return Graph6Errc::malformed_header;
}

}  // namespace

TEST_CASE("graph construction checks its arguments") {
  CHECK_THROWS_AS(Graph(17), std::invalid_argument);
  CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
  g.add_edge(0, 2);
  CHECK(g.adjacent(2, 0));
  CHECK(g.edge_count() == 1);
  g.remove_edge(2, 0);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("adjacency is symmetric and irreflexive for every small labelled graph") {
  for (std::uint64_t m = 0; m < 64; ++m) {
    const Graph g = oracle::from_mask(4, m);
    for (int u = 0; u < 4; ++u) {
      CHECK_FALSE(g.adjacent(u, u));
      for (int v = 0; v < 4; ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
    }
  }
}

TEST_CASE("graph6 decodes the small reference strings") {
  const Graph empty3 = parse_graph6("B?");
  CHECK(empty3.order() == 3);
  CHECK(empty3.edge_count() == 0);
  const Graph k3 = parse_graph6("Bw");
  CHECK(k3.order() == 3);
  CHECK(k3.edge_count() == 3);
  CHECK(write_graph6(Graph(1)) == "@");
  CHECK(write_graph6(graphs::complete(3)) == "Bw");
  CHECK(parse_graph6(">>graph6<<Bw\n") == k3);
}

TEST_CASE("graph6 reports each malformed input distinctly") {
  CHECK(parse_error("") == Graph6Errc::malformed_header);
  CHECK(parse_error("?") == Graph6Errc::order_out_of_range);
  CHECK(parse_error("Q") == Graph6Errc::order_out_of_range);
  CHECK(parse_error("C") == Graph6Errc::truncated);
  CHECK(parse_error("C~x") == Graph6Errc::trailing_data);
  CHECK(parse_error("C ") == Graph6Errc::invalid_character);
  CHECK(parse_error("B@") == Graph6Errc::nonzero_padding);
  CHECK(parse_error("~") == Graph6Errc::malformed_header);
  CHECK_THROWS_AS(write_graph6(Graph(0)), Graph6Error);
}

TEST_CASE("graph6 matches an independent encoder and round-trips up to order 5") {
  for (int n = 1; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs); ++m) {
      const Graph g = oracle::from_mask(n, m);
      const std::string text = write_graph6(g);
      CHECK(text == oracle::graph6(g));
      CHECK(parse_graph6(text) == g);
    }
  }
}

TEST_CASE("graph6 agrees with the atlas edge lists") {
  const auto atlas = oracle::read_atlas_edges(RECON_TEST_DATA "/atlas_edges.txt");
  REQUIRE(atlas.size() == 1252);
  for (const auto& entry : atlas) {
    const Graph g = parse_graph6(entry.graph6);
    Graph expected(entry.order);
    for (auto [u, v] : entry.edges) expected.add_edge(u, v);
    CHECK(g == expected);
    CHECK(write_graph6(g) == entry.graph6);
  }
}

TEST_CASE("graph6 is label-sensitive") {
  const Graph k3_minus = Graph(3, {{0, 1}, {1, 2}});
  const Graph other = Graph(3, {{0, 2}, {1, 2}});
  CHECK(write_graph6(k3_minus) != write_graph6(other));
  CHECK(canonical_key(k3_minus) == canonical_key(other));
}

TEST_CASE("induced subgraphs keep internal adjacency and an index map") {
  const Graph c5 = graphs::cycle(5);
  for_each_subset_of_size(c5.vertices(), 4, [&](VertexSet s) { CHECK(isomorphic(induced(c5, s), graphs::path(4))); });
  CHECK(induced(c5, c5.vertices()) == c5);
  const Graph paw = graphs::paw();
  CHECK(isomorphic(induced(paw, make_set({0, 1, 2})), graphs::complete(3)));
  const auto sub = induced_subgraph(paw, make_set({1, 3}));
  CHECK(sub.to_parent == std::vector<int>{1, 3});
  CHECK(sub.graph.edge_count() == 0);
  CHECK_THROWS_AS(induced_subgraph(paw, 0), std::invalid_argument);
  CHECK_THROWS_AS(induced_subgraph(paw, bit(4)), std::invalid_argument);
}

TEST_CASE("lexicographic subset iteration") {
  std::vector<VertexSet> seen;
  for_each_subset_of_size(make_set({0, 2, 3, 5}), 2, [&](VertexSet s) { seen.push_back(s); });
  const std::vector<VertexSet> expected{make_set({0, 2}), make_set({0, 3}), make_set({0, 5}),
                                        make_set({2, 3}), make_set({2, 5}), make_set({3, 5})};
  CHECK(seen == expected);
}

TEST_CASE("distances and connectivity") {
  const Graph p5 = graphs::path(5);
  const auto d = distances(p5);
  CHECK(d[0][4] == 4);
  CHECK(d[1][3] == 2);
  const Graph two = Graph(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(is_connected(two));
  CHECK(distances(two)[0][2] == kUnreachable);
  CHECK(components(two).size() == 2);
  CHECK(is_tree(graphs::star(4)));
  CHECK_FALSE(is_tree(graphs::cycle(4)));
}

TEST_CASE("canonical key: worked examples") {
  const Graph p4 = graphs::path(4);
  CHECK(canonical_key(p4) == canonical_key(reversed(p4)));
  CHECK(canonical_key(p4) != canonical_key(graphs::star(3)));
  std::set<CanonicalKey> keys;
  for (std::uint64_t m = 0; m < 64; ++m) keys.insert(canonical_key(oracle::from_mask(4, m)));
  CHECK(keys.size() == 11);
}

TEST_CASE("canonical key equality coincides with brute-force isomorphism up to order 6") {
  for (int n = 1; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::map<std::string, CanonicalKey> by_certificate;
    std::map<CanonicalKey, std::string> by_key;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs); ++m) {
      const Graph g = oracle::from_mask(n, m);
      const std::string cert = oracle::certificate(g);
      const CanonicalKey key = canonical_key(g);
      auto [it, fresh] = by_certificate.emplace(cert, key);
      if (!fresh) CHECK(it->second == key);
      auto [jt, fresh_key] = by_key.emplace(key, cert);
      if (!fresh_key) CHECK(jt->second == cert);
    }
    CHECK(by_certificate.size() == by_key.size());
  }
}

TEST_CASE("canonical labeling relabels onto the key") {
  for (const auto& g : oracle::all_classes(5)) {
    const auto lab = canonical_labeling(g);
    std::vector<int> image(g.order());
    for (int i = 0; i < g.order(); ++i) image[lab.order[i]] = i;
    CHECK(g.relabeled(image) == lab.key.graph());
  }
}

TEST_CASE("isomorphic: worked examples and witnesses") {
  const Graph paw = graphs::paw();
  CHECK(isomorphic(paw, paw));
  CHECK_FALSE(isomorphic(graphs::cycle(5), graphs::path(5)));
  const Graph p4 = graphs::path(4);
  const auto f = find_isomorphism(p4, p4.complement());
  REQUIRE(f.has_value());
  CHECK(p4.relabeled(f->image()) == p4.complement());
  const auto five = oracle::all_classes(5);
  for (const auto& g : five)
    for (const auto& h : five) CHECK(isomorphic(g, h) == oracle::isomorphic(g, h));
}

TEST_CASE("automorphisms: worked examples") {
  CHECK(automorphisms(graphs::cycle(4)).size() == 8);
  CHECK(automorphisms(graphs::complete(4)).size() == 24);
  std::size_t asymmetric = 0;
  for (const auto& g : oracle::all_classes(6)) {
    const auto auts = automorphisms(g);
    CHECK(auts.size() == oracle::automorphisms(g).size());
    if (auts.size() == 1) ++asymmetric;
  }
  // Brute-force count of asymmetric classes on six vertices.
  CHECK(asymmetric == 8);
}

TEST_CASE("automorphisms form a group") {
  for (const auto& g : oracle::all_classes(5)) {
    const auto auts = automorphisms(g);
    const std::set<Permutation> group(auts.begin(), auts.end());
    CHECK(group.size() == auts.size());
    CHECK(group.count(Permutation::identity(g.order())) == 1);
    for (const auto& a : auts) {
      CHECK(is_automorphism(g, a));
      CHECK(group.count(a.inverse()) == 1);
      for (const auto& b : auts) CHECK(group.count(a * b) == 1);
    }
  }
}

TEST_CASE("orbits: worked examples") {
  const auto p3 = orbits(graphs::path(3));
  CHECK(p3.classes == std::vector<VertexSet>{make_set({0, 2}), make_set({1})});
  const auto paw = orbits(graphs::paw());
  CHECK(paw.classes == std::vector<VertexSet>{make_set({0}), make_set({1, 2}), make_set({3})});
  CHECK(orbits(graphs::cycle(5)).size() == 1);
  CHECK(is_vertex_transitive(graphs::cycle(5)));
  CHECK_FALSE(is_vertex_transitive(graphs::path(4)));
  CHECK(is_vertex_transitive(graphs::cycle(6).complement()));
}

TEST_CASE("orbits agree with brute force and with similar()") {
  for (int n = 3; n <= 6; ++n) {
    for (const auto& g : oracle::all_classes(n)) {
      const auto rep = oracle::orbit_rep(g);
      const auto parts = orbits(g);
      VertexSet covered = 0;
      for (VertexSet c : parts.classes) {
        CHECK((covered & c) == 0);
        covered |= c;
      }
      CHECK(covered == g.vertices());
      for (int u = 0; u < n; ++u) {
        CHECK(parts.class_of(u) == parts.class_of(rep[u]));
        for (int v = 0; v < n; ++v) {
          const bool same = rep[u] == rep[v];
          CHECK((parts.class_of(u) == parts.class_of(v)) == same);
          if (n <= 5) CHECK(similar(g, u, v) == same);
        }
      }
    }
  }
}

TEST_CASE("class counts by order") {
  const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) CHECK(graph_classes(n).size() == expected[n - 1]);
  for (int n = 1; n <= 6; ++n) CHECK(graph_classes(n).size() == oracle::all_classes(n).size());
}

TEST_CASE("tree enumeration matches trees among all graphs") {
  for (int n = 1; n <= 9; ++n) {
    std::vector<CanonicalKey> filtered;
    for (const auto& key : graph_classes(n))
      if (is_tree(key.graph())) filtered.push_back(key);
    CHECK(tree_classes(n) == filtered);
  }
  CHECK(tree_classes(7).size() == 11);
  CHECK(tree_classes(10).size() == 106);
}
