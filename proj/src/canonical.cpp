#include "recon/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace recon {

namespace {

// Ordered partition of the vertex set: cells are contiguous runs of `elem`,
// and bit i of `ends` marks the last position of a cell.
struct Partition {
  int n = 0;
  std::array<std::int8_t, kMaxOrder> elem{};
  std::uint32_t ends = 0;

  bool discrete() const { return n == 0 || ends == full_set(n); }

  // First cell with more than one element, as [begin, end).
  std::pair<int, int> first_nonsingleton() const {
    int begin = 0;
    for (int i = 0; i < n; ++i) {
      if ((ends >> i) & 1u) {
        if (i > begin) return {begin, i + 1};
        begin = i + 1;
      }
    }
    return {n, n};
  }

  VertexSet cell_set(int begin, int end) const {
    VertexSet s = 0;
    for (int i = begin; i < end; ++i) s |= bit(elem[i]);
    return s;
  }
};

Partition initial_partition(int n, std::span<const std::uint32_t> colors) {
  Partition p;
  p.n = n;
  std::iota(p.elem.begin(), p.elem.begin() + n, 0);
  if (colors.empty()) {
    if (n > 0) p.ends = bit(n - 1);
    return p;
  }
  std::stable_sort(p.elem.begin(), p.elem.begin() + n, [&](int a, int b) { return colors[a] < colors[b]; });
  for (int i = 0; i < n; ++i)
    if (i + 1 == n || colors[p.elem[i]] != colors[p.elem[i + 1]]) p.ends |= bit(i);
  return p;
}

// Splits every cell by neighbour counts into each splitter cell until the
// partition is equitable. Sub-cells are ordered by increasing count, so the
// result depends only on the graph structure, not on labels.
void refine(const Graph& g, Partition& p) {
  bool changed = true;
  while (changed && !p.discrete()) {
    changed = false;
    for (int splitter_begin = 0; splitter_begin < p.n;) {
      int splitter_end = splitter_begin;
      while (!((p.ends >> splitter_end) & 1u)) ++splitter_end;
      ++splitter_end;
      const VertexSet mask = p.cell_set(splitter_begin, splitter_end);

      for (int begin = 0; begin < p.n;) {
        int end = begin;
        while (!((p.ends >> end) & 1u)) ++end;
        ++end;
        if (end - begin > 1) {
          std::array<int, kMaxOrder> count{};
          bool uniform = true;
          for (int i = begin; i < end; ++i) {
            count[p.elem[i]] = std::popcount(g.neighbors(p.elem[i]) & mask);
            if (count[p.elem[i]] != count[p.elem[begin]]) uniform = false;
          }
          if (!uniform) {
            std::stable_sort(p.elem.begin() + begin, p.elem.begin() + end,
                             [&](int a, int b) { return count[a] < count[b]; });
            for (int i = begin; i + 1 < end; ++i)
              if (count[p.elem[i]] != count[p.elem[i + 1]]) p.ends |= bit(i);
            changed = true;
          }
        }
        begin = end;
      }
      // The splitter's own extent may have changed; continue after its first cell.
      int next = splitter_begin;
      while (!((p.ends >> next) & 1u)) ++next;
      splitter_begin = next + 1;
    }
  }
}

Partition individualize(const Partition& p, int begin, int v) {
  Partition q = p;
  auto it = std::find(q.elem.begin() + begin, q.elem.begin() + q.n, v);
  std::rotate(q.elem.begin() + begin, it, it + 1);
  q.ends |= bit(begin);
  return q;
}

using Rows = std::array<std::uint16_t, kMaxOrder>;

Rows relabeled_rows(const Graph& g, const Partition& p) {
  std::array<int, kMaxOrder> pos{};
  for (int i = 0; i < p.n; ++i) pos[p.elem[i]] = i;
  Rows rows{};
  for (int i = 0; i < p.n; ++i) {
    VertexSet row = 0;
    for (VertexSet s = g.neighbors(p.elem[i]); s; s &= s - 1) row |= bit(pos[lowest(s)]);
    rows[i] = static_cast<std::uint16_t>(row);
  }
  return rows;
}

// Union-find over at most kMaxOrder vertices.
struct Dsu {
  std::array<int, kMaxOrder> parent{};
  explicit Dsu(int n) { std::iota(parent.begin(), parent.begin() + n, 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g) {}

  void run(Partition p) {
    std::vector<int> fixed;
    descend(p, fixed);
  }

  const Partition& best() const { return best_; }
  const Rows& best_rows() const { return best_rows_; }

 private:
  void descend(Partition p, std::vector<int>& fixed) {
    refine(g_, p);
    if (p.discrete()) {
      leaf(p);
      return;
    }
    const auto [begin, end] = p.first_nonsingleton();
    std::vector<int> candidates(p.elem.begin() + begin, p.elem.begin() + end);
    std::sort(candidates.begin(), candidates.end());
    std::vector<int> tried;
    for (int u : candidates) {
      if (pruned(u, tried, fixed)) continue;
      tried.push_back(u);
      fixed.push_back(u);
      descend(individualize(p, begin, u), fixed);
      fixed.pop_back();
    }
  }

  // u is equivalent to an already explored sibling under the automorphisms
  // found so far that fix the current prefix pointwise.
  bool pruned(int u, const std::vector<int>& tried, const std::vector<int>& fixed) const {
    if (tried.empty() || automorphisms_.empty()) return false;
    Dsu dsu(g_.order());
    for (const auto& a : automorphisms_) {
      bool fixes = std::all_of(fixed.begin(), fixed.end(), [&](int v) { return a[v] == v; });
      if (!fixes) continue;
      for (int v = 0; v < g_.order(); ++v) dsu.unite(v, a[v]);
    }
    return std::any_of(tried.begin(), tried.end(), [&](int w) { return dsu.find(w) == dsu.find(u); });
  }

  void leaf(const Partition& p) {
    const Rows rows = relabeled_rows(g_, p);
    if (!have_leaf_) {
      have_leaf_ = true;
      first_ = best_ = p;
      first_rows_ = best_rows_ = rows;
      return;
    }
    if (rows == first_rows_) record(first_, p);
    if (rows == best_rows_) {
      record(best_, p);
    } else if (rows < best_rows_) {
      best_ = p;
      best_rows_ = rows;
    }
  }

  // Both leaves give the same relabeled graph, so mapping position-wise
  // from `p` onto `target` is an automorphism.
  void record(const Partition& target, const Partition& p) {
    std::array<int, kMaxOrder> image{};
    for (int i = 0; i < p.n; ++i) image[p.elem[i]] = target.elem[i];
    bool identity = true;
    for (int v = 0; v < p.n; ++v) identity = identity && image[v] == v;
    if (!identity) automorphisms_.push_back(image);
  }

  const Graph& g_;
  bool have_leaf_ = false;
  Partition first_, best_;
  Rows first_rows_{}, best_rows_{};
  std::vector<std::array<int, kMaxOrder>> automorphisms_;
};

CanonicalKey key_from(int n, const Rows& rows) {
  CanonicalKey k;
  k.order = static_cast<std::uint8_t>(n);
  k.rows = rows;
  return k;
}

// Fixes the first vertex of each target cell on the `a` side and tries every
// vertex of the matching cell on the `b` side, so each isomorphism appears at
// exactly one leaf.
bool match(const Graph& a, Partition pa, const Graph& b, Partition pb, const IsomorphismVisitor& visit) {
  refine(a, pa);
  refine(b, pb);
  if (pa.ends != pb.ends) return true;
  if (pa.discrete()) {
    std::vector<int> image(pa.n);
    for (int i = 0; i < pa.n; ++i) image[pa.elem[i]] = pb.elem[i];
    for (int u = 0; u < pa.n; ++u) {
      VertexSet mapped = 0;
      for (VertexSet s = a.neighbors(u); s; s &= s - 1) mapped |= bit(image[lowest(s)]);
      if (mapped != b.neighbors(image[u])) return true;
    }
    return visit(Permutation(std::move(image)));
  }
  const auto [begin, end] = pa.first_nonsingleton();
  const Partition next_a = individualize(pa, begin, pa.elem[begin]);
  std::vector<int> candidates(pb.elem.begin() + begin, pb.elem.begin() + end);
  std::sort(candidates.begin(), candidates.end());
  for (int w : candidates)
    if (!match(a, next_a, b, individualize(pb, begin, w), visit)) return false;
  return true;
}

bool same_color_multiset(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y) {
  std::vector<std::uint32_t> sx(x.begin(), x.end()), sy(y.begin(), y.end());
  std::sort(sx.begin(), sx.end());
  std::sort(sy.begin(), sy.end());
  return sx == sy;
}

}  // namespace

// ---------------------------------------------------------------- keys

Graph CanonicalKey::graph() const {
  Graph g(order);
  for (int u = 0; u < order; ++u)
    for (int v = u + 1; v < order; ++v)
      if ((rows[u] >> v) & 1u) g.add_edge(u, v);
  return g;
}

std::string CanonicalKey::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  auto put = [&](unsigned byte) {
    out.push_back(kDigits[byte >> 4]);
    out.push_back(kDigits[byte & 15]);
  };
  put(order);
  for (int i = 0; i < order; ++i) {
    put(rows[i] >> 8);
    put(rows[i] & 0xff);
  }
  return out;
}

std::size_t CanonicalKeyHash::operator()(const CanonicalKey& k) const noexcept {
  std::uint64_t h = 1469598103934665603ull ^ k.order;
  for (int i = 0; i < k.order; ++i) {
    h ^= k.rows[i];
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

CanonicalLabeling canonical_labeling(const Graph& g) {
  CanonicalSearch search(g);
  search.run(initial_partition(g.order(), {}));
  CanonicalLabeling out;
  out.key = key_from(g.order(), search.best_rows());
  out.order.assign(search.best().elem.begin(), search.best().elem.begin() + g.order());
  return out;
}

CanonicalKey canonical_key(const Graph& g) {
  if (g.order() == 0) return {};
  CanonicalSearch search(g);
  search.run(initial_partition(g.order(), {}));
  return key_from(g.order(), search.best_rows());
}

ColoredForm colored_canonical_form(const Graph& g, std::span<const std::uint32_t> colors) {
  if (static_cast<int>(colors.size()) != g.order()) throw std::invalid_argument("one color per vertex required");
  ColoredForm out;
  out.colors.assign(colors.begin(), colors.end());
  std::sort(out.colors.begin(), out.colors.end());
  if (g.order() == 0) return out;
  CanonicalSearch search(g);
  search.run(initial_partition(g.order(), colors));
  out.key = key_from(g.order(), search.best_rows());
  return out;
}

// ---------------------------------------------------------------- isomorphisms

void for_each_isomorphism(const Graph& g, const Graph& h, const IsomorphismVisitor& visit) {
  for_each_isomorphism(g, {}, h, {}, visit);
}

void for_each_isomorphism(const Graph& g, std::span<const std::uint32_t> g_colors, const Graph& h,
                          std::span<const std::uint32_t> h_colors, const IsomorphismVisitor& visit) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return;
  if (g_colors.size() != h_colors.size()) throw std::invalid_argument("colorings must both be present or absent");
  if (!g_colors.empty() && !same_color_multiset(g_colors, h_colors)) return;
  if (g.order() == 0) {
    visit(Permutation::identity(0));
    return;
  }
  match(g, initial_partition(g.order(), g_colors), h, initial_partition(h.order(), h_colors), visit);
}

std::optional<Permutation> find_isomorphism(const Graph& g, const Graph& h) {
  std::optional<Permutation> found;
  for_each_isomorphism(g, h, [&](const Permutation& p) {
    found = p;
    return false;
  });
  return found;
}

bool isomorphic(const Graph& g, const Graph& h) {
  return g.order() == h.order() && g.edge_count() == h.edge_count() && canonical_key(g) == canonical_key(h);
}

std::vector<Permutation> automorphisms(const Graph& g) { return automorphisms(g, {}); }

std::vector<Permutation> automorphisms(const Graph& g, std::span<const std::uint32_t> colors) {
  std::vector<Permutation> out;
  for_each_isomorphism(g, colors, g, colors, [&](const Permutation& p) {
    out.push_back(p);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool similar(const Graph& g, int u, int v) {
  if (u == v) return true;
  Partition base = initial_partition(g.order(), {});
  refine(g, base);
  const auto cell_begin = [&](int x) {
    int pos = static_cast<int>(std::find(base.elem.begin(), base.elem.begin() + base.n, x) - base.elem.begin());
    while (pos > 0 && !((base.ends >> (pos - 1)) & 1u)) --pos;
    return pos;
  };
  const int begin = cell_begin(u);
  if (begin != cell_begin(v)) return false;
  bool found = false;
  match(g, individualize(base, begin, u), g, individualize(base, begin, v), [&](const Permutation&) {
    found = true;
    return false;
  });
  return found;
}

int OrbitPartition::class_of(int v) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (contains(classes[i], v)) return static_cast<int>(i);
  throw std::out_of_range("vertex not covered by orbit partition");
}

OrbitPartition orbits(const Graph& g) {
  const int n = g.order();
  Dsu dsu(n);
  Partition base = initial_partition(n, {});
  if (n > 0) refine(g, base);
  for (int begin = 0; begin < n;) {
    int end = begin;
    while (!((base.ends >> end) & 1u)) ++end;
    ++end;
    for (int i = begin; i < end; ++i) {
      for (int j = i + 1; j < end; ++j) {
        const int u = base.elem[i];
        const int v = base.elem[j];
        if (dsu.find(u) == dsu.find(v)) continue;
        match(g, individualize(base, begin, u), g, individualize(base, begin, v), [&](const Permutation& p) {
          for (int x = 0; x < n; ++x) dsu.unite(x, p(x));
          return false;
        });
      }
    }
    begin = end;
  }
  OrbitPartition out;
  std::array<int, kMaxOrder> slot{};
  slot.fill(-1);
  for (int v = 0; v < n; ++v) {
    const int root = dsu.find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.classes.size());
      out.classes.push_back(0);
    }
    out.classes[slot[root]] |= bit(v);
  }
  return out;
}

bool is_vertex_transitive(const Graph& g) { return orbits(g).size() <= 1; }

}  // namespace recon
