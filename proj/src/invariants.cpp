#include "regwitness/invariants.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace regwitness {

// ---- maximal cliques -------------------------------------------------------

namespace {

void bron_kerbosch(const Graph& g, uint32_t r, uint32_t p, uint32_t x,
                   std::vector<VertexSet>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  uint32_t px = p | x;
  int pivot = -1, best = -1;
  for (uint32_t m = px; m; m &= m - 1) {
    int u = __builtin_ctz(m);
    int c = __builtin_popcount(p & g.adj[u]);
    if (c > best) best = c, pivot = u;
  }
  uint32_t cand = p & ~g.adj[pivot];
  for (uint32_t m = cand; m; m &= m - 1) {
    int v = __builtin_ctz(m);
    uint32_t vb = 1u << v;
    bron_kerbosch(g, r | vb, p & g.adj[v], x & g.adj[v], out);
    p &= ~vb;
    x |= vb;
  }
}

}  // namespace

CliqueReport clique_report(const Graph& g) {
  CliqueReport rep;
  bron_kerbosch(g, 0, g.vertices(), 0, rep.maximal_cliques);
  std::sort(rep.maximal_cliques.begin(), rep.maximal_cliques.end());
  rep.clique_count = static_cast<int>(rep.maximal_cliques.size());
  for (VertexSet c : rep.maximal_cliques)
    rep.clique_number = std::max(rep.clique_number, vcount(c));
  return rep;
}

VertexSet internal_vertices(const Graph& g) {
  CliqueReport rep = clique_report(g);
  VertexSet internal = 0;
  for (int v = 0; v < g.n; ++v) {
    int count = 0;
    for (VertexSet c : rep.maximal_cliques)
      if ((c >> v) & 1) ++count;
    if (count >= 2) internal |= 1u << v;
  }
  return internal;
}

// ---- exact MIS on small conflict graphs ------------------------------------

namespace {

struct Mask128 {
  uint64_t a = 0, b = 0;
  bool any() const { return a | b; }
  int count() const { return __builtin_popcountll(a) + __builtin_popcountll(b); }
  bool test(int i) const { return i < 64 ? (a >> i) & 1 : (b >> (i - 64)) & 1; }
  void set(int i) { (i < 64 ? a : b) |= uint64_t(1) << (i & 63); }
  int first() const { return a ? __builtin_ctzll(a) : 64 + __builtin_ctzll(b); }
  Mask128 operator&(Mask128 o) const { return {a & o.a, b & o.b}; }
  Mask128 operator~() const { return {~a, ~b}; }
};

struct MisSolver {
  const std::vector<Mask128>& nb;  // open neighborhoods in the conflict graph
  int best = 0;

  void go(Mask128 p, int size) {
    if (size + p.count() <= best) return;
    if (!p.any()) {
      best = std::max(best, size);
      return;
    }
    int v = -1, deg = -1;
    for (Mask128 m = p; m.any();) {
      int u = m.first();
      Mask128 ub;
      ub.set(u);
      m = m & ~ub;
      int d = (p & nb[u]).count();
      if (d > deg) deg = d, v = u;
    }
    Mask128 vb;
    vb.set(v);
    go(p & ~(nb[v] | vb), size + 1);
    if (deg > 0) go(p & ~vb, size);
  }
};

inline Mask128 operator|(Mask128 x, Mask128 y) { return {x.a | y.a, x.b | y.b}; }

int max_independent_set(const std::vector<Mask128>& nb, int nodes) {
  Mask128 all;
  for (int i = 0; i < nodes; ++i) all.set(i);
  MisSolver s{nb};
  s.go(all, 0);
  return s.best;
}

bool induces_complete(const Graph& g, uint32_t verts) {
  for (uint32_t m = verts; m; m &= m - 1) {
    int u = __builtin_ctz(m);
    if ((g.adj[u] & verts) != (verts & ~(1u << u))) return false;
  }
  return true;
}

}  // namespace

int eta(const Graph& g) {
  auto es = g.edges();
  int ne = static_cast<int>(es.size());
  if (ne == 0) return 0;
  if (ne > 128) throw std::invalid_argument("eta: too many edges for exact search");
  std::vector<Mask128> nb(ne);
  for (int i = 0; i < ne; ++i)
    for (int j = i + 1; j < ne; ++j) {
      uint32_t u = (1u << es[i].first) | (1u << es[i].second) | (1u << es[j].first) |
                   (1u << es[j].second);
      if (induces_complete(g, u)) {
        nb[i].set(j);
        nb[j].set(i);
      }
    }
  return max_independent_set(nb, ne);
}

int matching_number(const Graph& g) {
  auto es = g.edges();
  int ne = static_cast<int>(es.size());
  if (ne == 0) return 0;
  if (ne > 128) throw std::invalid_argument("matching_number: too many edges for exact search");
  std::vector<Mask128> nb(ne);
  for (int i = 0; i < ne; ++i)
    for (int j = i + 1; j < ne; ++j) {
      bool share = es[i].first == es[j].first || es[i].first == es[j].second ||
                   es[i].second == es[j].first || es[i].second == es[j].second;
      if (share) {
        nb[i].set(j);
        nb[j].set(i);
      }
    }
  return max_independent_set(nb, ne);
}

// ---- gamma and clique-complex dimensions ------------------------------------

int gamma_m(const Graph& g, int m) {
  if (m < 2) throw std::invalid_argument("gamma_m needs m >= 2");
  int total = 0;
  for (VertexSet comp : connected_components(g)) {
    Graph gi = induced_subgraph(g, comp);
    int omega = clique_report(gi).clique_number;
    total += std::min(m - omega - 1, -1);
  }
  return total;
}

std::vector<int> clique_complex_dims(const Graph& g) {
  std::vector<int> dims;
  for (VertexSet comp : connected_components(g)) {
    Graph gi = induced_subgraph(g, comp);
    if (gi.edge_count() == 0) {
      dims.push_back(0);
    } else {
      dims.push_back(std::max(clique_report(gi).clique_number - 1, 1));
    }
  }
  return dims;
}

// ---- longest induced path ---------------------------------------------------

namespace {

void lip_extend(const Graph& g, uint32_t path, int last, int& best) {
  best = std::max(best, vcount(path) - 1);
  uint32_t cand = g.adj[last] & ~path;
  uint32_t earlier = path & ~(1u << last);
  for (uint32_t m = cand; m; m &= m - 1) {
    int u = __builtin_ctz(m);
    if (g.adj[u] & earlier) continue;  // chord back into the path
    lip_extend(g, path | (1u << u), u, best);
  }
}

}  // namespace

int longest_induced_path(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.n; ++v) lip_extend(g, 1u << v, v, best);
  return best;
}

// ---- pendant profile ---------------------------------------------------------

PendantProfile pendant_profile(const Graph& g) {
  PendantProfile prof;
  prof.cdeg.assign(g.n, 0);
  prof.pdeg.assign(g.n, 0);
  prof.type.assign(g.n, 0);
  CliqueReport rep = clique_report(g);
  for (int v = 0; v < g.n; ++v) {
    for (VertexSet c : rep.maximal_cliques)
      if ((c >> v) & 1) ++prof.cdeg[v];
    for (uint32_t m = g.adj[v]; m; m &= m - 1)
      if (g.degree(__builtin_ctz(m)) == 1) ++prof.pdeg[v];
    if (g.degree(v) == 1) ++prof.pv;
  }
  for (int v = 0; v < g.n; ++v) {
    if (prof.pdeg[v] < 1) continue;
    if (prof.cdeg[v] == prof.pdeg[v] + 1) prof.type[v] = 1;
    else if (prof.cdeg[v] >= prof.pdeg[v] + 2) prof.type[v] = 2;
  }
  for (int t : prof.type) prof.alpha += (t == 1);
  return prof;
}

// ---- recognition -------------------------------------------------------------

bool is_tree(const Graph& g) { return is_connected(g) && g.edge_count() == g.n - 1; }

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.n, -1);
  for (int s = 0; s < g.n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (uint32_t m = g.adj[u]; m; m &= m - 1) {
        int v = __builtin_ctz(m);
        if (color[v] == -1) {
          color[v] = color[u] ^ 1;
          stack.push_back(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_chordal(const Graph& g) {
  // Maximum cardinality search; G is chordal iff the reverse selection order
  // is a perfect elimination order.
  std::vector<int> weight(g.n, 0);
  std::vector<int> order;
  uint32_t unnumbered = g.vertices();
  while (unnumbered) {
    int pick = -1, w = -1;
    for (uint32_t m = unnumbered; m; m &= m - 1) {
      int v = __builtin_ctz(m);
      if (weight[v] > w) w = weight[v], pick = v;
    }
    order.push_back(pick);
    unnumbered &= ~(1u << pick);
    for (uint32_t m = g.adj[pick] & unnumbered; m; m &= m - 1) ++weight[__builtin_ctz(m)];
  }
  std::reverse(order.begin(), order.end());  // elimination order
  std::vector<int> pos(g.n);
  for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
  for (int i = 0; i < g.n; ++i) {
    uint32_t later = 0;
    for (uint32_t m = g.adj[order[i]]; m; m &= m - 1) {
      int u = __builtin_ctz(m);
      if (pos[u] > i) later |= 1u << u;
    }
    if (!induces_complete(g, later)) return false;
  }
  return true;
}

namespace {

// Incremental labeling search for closedness: placing vertex u at position k,
// every triple of placed positions must satisfy the two clique conditions.
bool closed_dfs(const Graph& g, std::vector<int>& placed, uint32_t used) {
  int k = static_cast<int>(placed.size());
  if (k == g.n) return true;
  for (int u = 0; u < g.n; ++u) {
    if (used & (1u << u)) continue;
    bool ok = true;
    for (int x = 0; x < k && ok; ++x) {
      for (int y = x + 1; y < k && ok; ++y) {
        int vx = placed[x], vy = placed[y];
        if (g.has_edge(vx, u) && g.has_edge(vy, u) && !g.has_edge(vx, vy)) ok = false;
        if (g.has_edge(vx, vy) && g.has_edge(vx, u) && !g.has_edge(vy, u)) ok = false;
      }
    }
    if (!ok) continue;
    placed.push_back(u);
    if (closed_dfs(g, placed, used | (1u << u))) return true;
    placed.pop_back();
  }
  return false;
}

}  // namespace

bool is_closed(const Graph& g) {
  if (g.n > 9) throw std::invalid_argument("closedness test supported for n <= 9");
  if (!is_chordal(g)) return false;
  std::vector<int> placed;
  placed.reserve(g.n);
  return closed_dfs(g, placed, 0);
}

bool is_traceable(const Graph& g) {
  if (g.n > 20) throw std::invalid_argument("traceability test supported for n <= 20");
  if (g.n == 1) return true;
  if (!is_connected(g)) return false;
  std::vector<uint32_t> ends(size_t(1) << g.n, 0);
  for (int v = 0; v < g.n; ++v) ends[1u << v] = 1u << v;
  uint32_t full = g.vertices();
  for (uint32_t mask = 1; mask <= full; ++mask) {
    uint32_t e = ends[mask];
    if (!e) continue;
    if (mask == full) return true;
    for (uint32_t m = e; m; m &= m - 1) {
      int last = __builtin_ctz(m);
      for (uint32_t c = g.adj[last] & ~mask; c; c &= c - 1) {
        int nxt = __builtin_ctz(c);
        ends[mask | (1u << nxt)] |= 1u << nxt;
      }
    }
  }
  return false;
}

bool is_path(const Graph& g) {
  if (!is_connected(g) || g.edge_count() != g.n - 1) return false;
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

bool is_cycle(const Graph& g) {
  if (g.n < 3 || !is_connected(g)) return false;
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

bool is_complete(const Graph& g) {
  for (int v = 0; v < g.n; ++v)
    if (g.adj[v] != (g.vertices() & ~(1u << v))) return false;
  return true;
}

std::optional<std::pair<int, int>> complete_bipartite_parts(const Graph& g) {
  if (!is_connected(g) || g.n < 2) return std::nullopt;
  std::vector<int> color(g.n, -1);
  color[0] = 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (uint32_t m = g.adj[u]; m; m &= m - 1) {
      int v = __builtin_ctz(m);
      if (color[v] == -1) {
        color[v] = color[u] ^ 1;
        stack.push_back(v);
      } else if (color[v] == color[u]) {
        return std::nullopt;
      }
    }
  }
  uint32_t part0 = 0, part1 = 0;
  for (int v = 0; v < g.n; ++v) (color[v] == 0 ? part0 : part1) |= 1u << v;
  for (uint32_t m = part0; m; m &= m - 1)
    if (g.adj[__builtin_ctz(m)] != part1) return std::nullopt;
  int a = vcount(part0), b = vcount(part1);
  return std::make_pair(std::min(a, b), std::max(a, b));
}

// ---- blocks -----------------------------------------------------------------

namespace {

struct BlockFinder {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<std::pair<int, int>> estack;
  std::vector<VertexSet> blocks;
  VertexSet cuts = 0;
  int timer = 0;

  explicit BlockFinder(const Graph& gr) : g(gr), disc(gr.n, -1), low(gr.n, 0) {}

  void pop_block(int u, int v) {
    VertexSet b = 0;
    std::pair<int, int> e;
    do {
      e = estack.back();
      estack.pop_back();
      b |= (1u << e.first) | (1u << e.second);
    } while (e != std::make_pair(u, v));
    blocks.push_back(b);
  }

  void dfs(int u, int parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (uint32_t m = g.adj[u]; m; m &= m - 1) {
      int v = __builtin_ctz(m);
      if (v == parent) continue;
      if (disc[v] == -1) {
        ++children;
        estack.emplace_back(u, v);
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if ((parent == -1 && children > 1) || (parent != -1 && low[v] >= disc[u]))
          cuts |= 1u << u;
        if (low[v] >= disc[u]) pop_block(u, v);
      } else if (disc[v] < disc[u]) {
        estack.emplace_back(u, v);
        low[u] = std::min(low[u], disc[v]);
      }
    }
  }
};

}  // namespace

BlockDecomposition blocks_and_cutvertices(const Graph& g) {
  BlockFinder bf(g);
  for (int v = 0; v < g.n; ++v)
    if (bf.disc[v] == -1) bf.dfs(v, -1);
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) == 0) bf.blocks.push_back(1u << v);
  std::sort(bf.blocks.begin(), bf.blocks.end());
  return {bf.blocks, bf.cuts};
}

bool blocks_are_cycles_or_cliques(const Graph& g) {
  for (VertexSet b : blocks_and_cutvertices(g).blocks) {
    Graph sub = induced_subgraph(g, b);
    if (is_complete(sub)) continue;
    if (is_cycle(sub)) continue;
    return false;
  }
  return true;
}

// ---- classification ----------------------------------------------------------

namespace {

bool reduced_is(const Graph& g, bool (*pred)(const Graph&)) {
  uint32_t keep = 0;
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) != 1) keep |= 1u << v;
  if (keep == 0) return true;  // everything was a leaf
  return pred(induced_subgraph(g, keep));
}

bool is_caterpillar_tree(const Graph& t) { return reduced_is(t, is_path); }

}  // namespace

ClassFlags classify(const Graph& g) {
  ClassFlags f;
  f.tree = is_tree(g);
  f.bipartite = is_bipartite(g);
  f.chordal = is_chordal(g);
  auto blocks = blocks_and_cutvertices(g).blocks;
  f.block_graph = true;
  f.cactus = true;
  for (VertexSet b : blocks) {
    if (vcount(b) == 1) continue;  // isolated vertex, degenerate block
    Graph sub = induced_subgraph(g, b);
    if (!is_complete(sub)) f.block_graph = false;
    if (!(vcount(b) == 2 || is_cycle(sub))) f.cactus = false;
  }
  f.caterpillar = f.tree && is_caterpillar_tree(g);
  f.lobster = f.tree && reduced_is(g, is_caterpillar_tree);
  PendantProfile prof = pendant_profile(g);
  f.indecomposable = true;
  for (int v = 0; v < g.n; ++v)
    if (prof.cdeg[v] == 2) f.indecomposable = false;
  if (g.n <= 9) f.closed = is_closed(g);
  if (g.n <= 20) f.traceable = is_traceable(g);
  if (g.n <= 12) f.accessible = is_accessible(g);
  return f;
}

// ---- spines -----------------------------------------------------------------

namespace {

std::vector<int> tree_path(const Graph& t, int u, int v) {
  std::vector<int> parent(t.n, -1);
  std::vector<int> stack{u};
  std::vector<bool> seen(t.n, false);
  seen[u] = true;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (uint32_t m = t.adj[x]; m; m &= m - 1) {
      int y = __builtin_ctz(m);
      if (!seen[y]) {
        seen[y] = true;
        parent[y] = x;
        stack.push_back(y);
      }
    }
  }
  std::vector<int> path;
  for (int x = v; x != -1; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

SpineParams params_for_spine(const Graph& t, std::vector<int> spine) {
  SpineParams sp;
  sp.spine = std::move(spine);
  sp.length = static_cast<int>(sp.spine.size()) - 1;
  uint32_t on = 0;
  for (int v : sp.spine) on |= 1u << v;
  for (int v = 0; v < t.n; ++v) {
    if (on & (1u << v)) continue;
    bool touches_spine = (t.adj[v] & on) != 0;
    int deg = t.degree(v);
    if (touches_spine && deg >= 2) ++sp.limbs;
    if (touches_spine && deg == 1) ++sp.whiskers;
    if (deg >= 3) ++sp.d3;
  }
  for (auto [a, b] : t.edges()) {
    bool off_spine = !((on >> a) & 1) || !((on >> b) & 1);
    if (off_spine && t.degree(a) <= 2 && t.degree(b) <= 2) ++sp.e2;
  }
  return sp;
}

}  // namespace

std::vector<SpineParams> spine_params_all(const Graph& tree) {
  if (!is_tree(tree)) throw std::invalid_argument("spine parameters require a tree");
  int best = 0;
  std::vector<std::vector<int>> longest;
  for (int u = 0; u < tree.n; ++u)
    for (int v = u + 1; v < tree.n; ++v) {
      auto p = tree_path(tree, u, v);
      int len = static_cast<int>(p.size()) - 1;
      if (len > best) {
        best = len;
        longest.clear();
      }
      if (len == best) {
        auto rev = p;
        std::reverse(rev.begin(), rev.end());
        longest.push_back(std::min(p, rev));
      }
    }
  std::sort(longest.begin(), longest.end());
  longest.erase(std::unique(longest.begin(), longest.end()), longest.end());
  std::vector<SpineParams> out;
  out.reserve(longest.size());
  for (auto& p : longest) out.push_back(params_for_spine(tree, std::move(p)));
  return out;
}

SpineParams spine_params(const Graph& tree) { return spine_params_all(tree).front(); }

// ---- cactus parameters --------------------------------------------------------

CactusParams cactus_params(const Graph& g) {
  CactusParams cp;
  int cycle_edges = 0;
  for (VertexSet b : blocks_and_cutvertices(g).blocks) {
    Graph sub = induced_subgraph(g, b);
    if (is_complete(sub)) continue;
    if (!is_cycle(sub)) throw std::invalid_argument("cactus parameters need cycle-or-clique blocks");
    int k = vcount(b);
    ++cp.cycle_counts[k];
    cycle_edges += k;
  }
  cp.c_prime = clique_report(g).clique_count - cycle_edges;
  return cp;
}

// ---- cut sets & accessibility ---------------------------------------------------

namespace {

int components_of_subset(const Graph& g, uint32_t verts) {
  int count = 0;
  uint32_t left = verts;
  while (left) {
    uint32_t comp = 1u << __builtin_ctz(left);
    for (;;) {
      uint32_t grow = comp;
      for (uint32_t m = comp; m; m &= m - 1) grow |= g.adj[__builtin_ctz(m)] & verts;
      if (grow == comp) break;
      comp = grow;
    }
    ++count;
    left &= ~comp;
  }
  return count;
}

}  // namespace

std::vector<VertexSet> cut_sets(const Graph& g) {
  if (g.n > 12) throw std::invalid_argument("cut set enumeration supported for n <= 12");
  std::vector<VertexSet> out;
  uint32_t full = g.vertices();
  for (uint32_t t = 1; t <= full; ++t) {
    if ((t & full) != t) continue;
    uint32_t rest = full & ~t;
    int base = components_of_subset(g, rest);
    bool ok = true;
    for (uint32_t m = t; m && ok; m &= m - 1) {
      uint32_t v = 1u << __builtin_ctz(m);
      if (components_of_subset(g, rest | v) >= base) ok = false;
    }
    if (ok) out.push_back(t);
  }
  return out;
}

bool is_accessible(const Graph& g) {
  auto sets = cut_sets(g);
  std::set<uint32_t> lookup(sets.begin(), sets.end());
  for (uint32_t t : sets) {
    bool ok = false;
    for (uint32_t m = t; m && !ok; m &= m - 1) {
      uint32_t rest = t & ~(1u << __builtin_ctz(m));
      if (rest == 0 || lookup.count(rest)) ok = true;
    }
    if (!ok) return false;
  }
  return true;
}

// ---- jewel detection --------------------------------------------------------

namespace {

// Pattern adjacency of the jewel: 0 center; 1,2,3 branch; 4..9 leaves.
constexpr int kJewelN = 10;
constexpr std::pair<int, int> kJewelEdges[] = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5},
                                               {2, 6}, {2, 7}, {3, 8}, {3, 9}};

bool embed(const Graph& host, const std::vector<int>& order,
           const std::vector<std::vector<int>>& pat_adj, const std::vector<int>& pat_deg,
           std::vector<int>& image, uint32_t used, size_t step) {
  if (step == order.size()) return true;
  int pv = order[step];
  for (int hv = 0; hv < host.n; ++hv) {
    if (used & (1u << hv)) continue;
    if (host.degree(hv) < pat_deg[pv]) continue;
    bool ok = true;
    for (int pu : pat_adj[pv]) {
      if (image[pu] >= 0 && !host.has_edge(image[pu], hv)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    image[pv] = hv;
    if (embed(host, order, pat_adj, pat_deg, image, used | (1u << hv), step + 1)) return true;
    image[pv] = -1;
  }
  return false;
}

}  // namespace

bool contains_jewel_subgraph(const Graph& tree) {
  if (!is_tree(tree)) throw std::invalid_argument("jewel detection is scoped to trees");
  if (tree.n < kJewelN) return false;
  std::vector<std::vector<int>> pat_adj(kJewelN);
  std::vector<int> pat_deg(kJewelN, 0);
  for (auto [a, b] : kJewelEdges) {
    pat_adj[a].push_back(b);
    pat_adj[b].push_back(a);
    ++pat_deg[a];
    ++pat_deg[b];
  }
  std::vector<int> order{0, 1, 4, 5, 2, 6, 7, 3, 8, 9};  // connectivity order
  std::vector<int> image(kJewelN, -1);
  return embed(tree, order, pat_adj, pat_deg, image, 0, 0);
}

// ---- Cohen-Macaulay bipartite composition parameters ---------------------------

CmBipartiteParams cm_bipartite_params(const CompositionSpec& spec) {
  int t = static_cast<int>(spec.ms.size());
  if (t < 2) throw std::invalid_argument("composition parameters need t >= 2");
  for (int m : spec.ms)
    if (m < 3) throw std::invalid_argument("composition blocks need m_i >= 3");
  CmBipartiteParams out;
  out.alpha = 2;  // the fixed indices {1, t}
  for (int j = 2; j <= t - 1; ++j)
    if (spec.ms[j - 1] >= 4) ++out.alpha;
  if (t >= 3) {
    // H_G lives on {2..t-1}, relabeled 1..t-2.
    Graph h(t - 2);
    for (int i = 2; i <= t - 2; ++i)
      if (spec.ms[i - 1] == 3 && spec.ms[i] == 3) h.add_edge(i - 2, i - 1);
    out.ma = matching_number(h);
    out.h = std::move(h);
  }
  return out;
}

}  // namespace regwitness
