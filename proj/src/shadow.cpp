#include "recon/shadow.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>
#include <sstream>

#include "recon/graph6.hpp"

namespace recon {

namespace {

Graph induced_or_empty(const Graph& g, VertexSet keep) { return keep == 0 ? Graph(0) : induced(g, keep); }

std::vector<std::uint32_t> mapped_colors(const ShadowGraph& x, const Permutation& background_map) {
  std::vector<std::uint32_t> colors(x.size());
  for (int i = 0; i < x.size(); ++i) colors[i] = background_map.apply(x.vertex(i));
  return colors;
}

// Calls visit(background_map, vertex_map) for every shadow isomorphism x -> y.
template <typename Visit>
void for_each_shadow_iso(const ShadowGraph& x, const ShadowGraph& y, Visit&& visit) {
  if (x.size() != y.size() || x.edges().edge_count() != y.edges().edge_count()) return;
  std::vector<std::uint32_t> y_colors(y.vertices().begin(), y.vertices().end());
  for_each_isomorphism(x.background(), y.background(), [&](const Permutation& f) {
    const auto x_colors = mapped_colors(x, f);
    bool keep_going = true;
    for_each_isomorphism(x.edges(), x_colors, y.edges(), y_colors, [&](const Permutation& pi) {
      keep_going = visit(f, pi);
      return keep_going;
    });
    return keep_going;
  });
}

}  // namespace

// ---------------------------------------------------------------- ShadowGraph

ShadowGraph::ShadowGraph(Graph background, std::vector<VertexSet> vertices, Graph edges)
    : background_(std::move(background)), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (edges_.order() != size()) throw std::invalid_argument("shadow edge graph must have one vertex per shadow vertex");
  for (VertexSet s : vertices_)
    if (s & ~background_.vertices()) throw std::invalid_argument("shadow vertex is not a subset of the background");
}

ShadowGraph ShadowGraph::sub(VertexSet keep) const {
  std::vector<VertexSet> kept;
  for (int i : members(keep)) kept.push_back(vertices_.at(i));
  return ShadowGraph(background_, std::move(kept), induced_or_empty(edges_, keep));
}

BuiltShadow build_shadow_mapped(const Graph& g, VertexSet anchor) {
  const VertexSet rest = g.vertices() & ~anchor;
  if (anchor == 0 || (anchor & ~g.vertices()) || rest == 0) {
    throw std::invalid_argument("build_shadow: anchor must be a proper nonempty vertex subset");
  }
  auto sub = induced_subgraph(g, anchor);
  std::array<int, kMaxOrder> local{};
  for (int i = 0; i < static_cast<int>(sub.to_parent.size()); ++i) local[sub.to_parent[i]] = i;

  std::vector<int> outside = members(rest);
  std::vector<VertexSet> vertices;
  for (int v : outside) {
    VertexSet s = 0;
    for (VertexSet t = g.neighbors(v) & anchor; t; t &= t - 1) s |= bit(local[lowest(t)]);
    vertices.push_back(s);
  }
  Graph edges = induced(g, rest);
  return {ShadowGraph(std::move(sub.graph), std::move(vertices), std::move(edges)), std::move(sub.to_parent),
          std::move(outside)};
}

ShadowGraph build_shadow(const Graph& g, VertexSet anchor) { return build_shadow_mapped(g, anchor).shadow; }

Graph unbuild(const ShadowGraph& x) {
  const int h = x.background().order();
  Graph g(h + x.size());
  for (int u = 0; u < h; ++u)
    for (int v = u + 1; v < h; ++v)
      if (x.background().adjacent(u, v)) g.add_edge(u, v);
  for (int i = 0; i < x.size(); ++i) {
    for (int u : members(x.vertex(i))) g.add_edge(h + i, u);
    for (int j = i + 1; j < x.size(); ++j)
      if (x.adjacent(i, j)) g.add_edge(h + i, h + j);
  }
  return g;
}

// ---------------------------------------------------------------- isomorphism

std::optional<ShadowIso> shadow_isomorphic(const ShadowGraph& x, const ShadowGraph& y) {
  std::optional<ShadowIso> found;
  for_each_shadow_iso(x, y, [&](const Permutation& f, const Permutation& pi) {
    found = ShadowIso{f, pi};
    return false;
  });
  return found;
}

bool is_shadow_iso(const ShadowGraph& x, const ShadowGraph& y, const ShadowIso& iso) {
  if (x.size() != y.size() || iso.vertex_map.size() != x.size()) return false;
  if (iso.background_map.size() != x.background().order() || x.background().order() != y.background().order()) return false;
  for (int u = 0; u < x.background().order(); ++u)
    if (iso.background_map.apply(x.background().neighbors(u)) != y.background().neighbors(iso.background_map(u)))
      return false;
  for (int i = 0; i < x.size(); ++i) {
    if (iso.background_map.apply(x.vertex(i)) != y.vertex(iso.vertex_map(i))) return false;
    if (iso.vertex_map.apply(x.edges().neighbors(i)) != y.edges().neighbors(iso.vertex_map(i))) return false;
  }
  return true;
}

std::vector<ShadowIso> shadow_automorphisms(const ShadowGraph& x) {
  std::vector<ShadowIso> out;
  for_each_shadow_iso(x, x, [&](const Permutation& f, const Permutation& pi) {
    out.push_back({f, pi});
    return true;
  });
  std::sort(out.begin(), out.end(), [](const ShadowIso& a, const ShadowIso& b) {
    return std::tie(a.background_map, a.vertex_map) < std::tie(b.background_map, b.vertex_map);
  });
  return out;
}

std::vector<VertexSet> shadow_orbits(const ShadowGraph& x) {
  const int m = x.size();
  std::vector<int> root(m);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int v) {
    while (root[v] != v) v = root[v];
    return v;
  };
  for_each_shadow_iso(x, x, [&](const Permutation&, const Permutation& pi) {
    for (int i = 0; i < m; ++i) {
      const int a = find(i), b = find(pi(i));
      if (a != b) root[std::max(a, b)] = std::min(a, b);
    }
    return true;
  });
  std::vector<VertexSet> classes;
  std::vector<int> slot(m, -1);
  for (int i = 0; i < m; ++i) {
    const int r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(classes.size());
      classes.push_back(0);
    }
    classes[slot[r]] |= bit(i);
  }
  return classes;
}

bool is_shadow_vertex_transitive(const ShadowGraph& x) { return shadow_orbits(x).size() <= 1; }

bool is_fixed_shadow_vertex(const ShadowGraph& x, int i) {
  bool fixed = true;
  for_each_isomorphism(x.background(), x.background(), [&](const Permutation& theta) {
    fixed = theta.apply(x.vertex(i)) == x.vertex(i);
    return fixed;
  });
  return fixed;
}

// ---------------------------------------------------------------- anchors

ColoredForm sub_shadow_form(const ShadowGraph& x, VertexSet keep, const std::vector<Permutation>& background_auts) {
  const Graph edges = induced_or_empty(x.edges(), keep);
  const auto kept = members(keep);
  std::optional<ColoredForm> best;
  std::vector<std::uint32_t> colors(kept.size());
  for (const auto& theta : background_auts) {
    for (std::size_t i = 0; i < kept.size(); ++i) colors[i] = theta.apply(x.vertex(kept[i]));
    ColoredForm form = colored_canonical_form(edges, colors);
    if (!best || form < *best) best = std::move(form);
  }
  return *best;
}

std::vector<VertexSet> shadow_anchors(const ShadowGraph& x) {
  const int m = x.size();
  std::vector<VertexSet> out;
  if (m < 2) return out;
  const auto auts = automorphisms(x.background());
  for (int k = 1; k < m; ++k) {
    std::vector<std::pair<ColoredForm, VertexSet>> forms;
    for_each_subset_of_size(full_set(m), k, [&](VertexSet keep) { forms.emplace_back(sub_shadow_form(x, keep, auts), keep); });
    std::map<ColoredForm, int> multiplicity;
    for (const auto& [form, keep] : forms) ++multiplicity[form];
    for (const auto& [form, keep] : forms)
      if (multiplicity[form] == 1) out.push_back(keep);
  }
  return out;
}

std::vector<ShadowGraph> shadow_deck(const ShadowGraph& x) {
  std::vector<ShadowGraph> out;
  for (int i = 0; i < x.size(); ++i) out.push_back(x.sub(full_set(x.size()) & ~bit(i)));
  return out;
}

// ---------------------------------------------------------------- text form

std::string write_shadow(const ShadowGraph& x) {
  std::string out = "background " + write_graph6(x.background()) + "\n";
  for (VertexSet s : x.vertices()) {
    out += "vertex";
    for (int u : members(s)) out += " " + std::to_string(u);
    out += "\n";
  }
  for (int i = 0; i < x.size(); ++i)
    for (int j = i + 1; j < x.size(); ++j)
      if (x.adjacent(i, j)) out += "edge " + std::to_string(i) + " " + std::to_string(j) + "\n";
  return out;
}

ShadowGraph parse_shadow(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<Graph> background;
  std::vector<VertexSet> vertices;
  std::vector<std::pair<int, int>> edges;
  int line_no = 0;
  auto fail = [&](const std::string& why) {
    throw ShadowFormatError("shadow line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "background") {
      if (background) fail("duplicate background");
      std::string g6;
      fields >> g6;
      try {
        background = parse_graph6(g6);
      } catch (const Graph6Error& e) {
        fail(e.what());
      }
    } else if (tag == "vertex") {
      if (!background) fail("vertex before background");
      VertexSet s = 0;
      int u;
      while (fields >> u) {
        if (u < 0 || u >= background->order()) fail("background index out of range");
        s |= bit(u);
      }
      if (!fields.eof()) fail("bad vertex entry");
      vertices.push_back(s);
    } else if (tag == "edge") {
      int a, b;
      if (!(fields >> a >> b)) fail("bad edge entry");
      edges.emplace_back(a, b);
    } else {
      fail("unknown tag '" + tag + "'");
    }
  }
  if (!background) throw ShadowFormatError("shadow: missing background line");
  if (vertices.size() > static_cast<std::size_t>(kMaxOrder)) throw ShadowFormatError("shadow: too many vertices");
  Graph shadow_edges(static_cast<int>(vertices.size()));
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= shadow_edges.order() || b >= shadow_edges.order() || a == b)
      throw ShadowFormatError("shadow: edge endpoint out of range");
    shadow_edges.add_edge(a, b);
  }
  return ShadowGraph(std::move(*background), std::move(vertices), std::move(shadow_edges));
}

}  // namespace recon
