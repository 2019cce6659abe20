#include "regwitness/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace regwitness {

Graph::Graph(int vertices) : n(vertices) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("vertex count must be in 1..32, got " + std::to_string(n));
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("loop edge");
  if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("vertex label out of range");
  adj[u] |= 1u << v;
  adj[v] |= 1u << u;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int i = 0; i < n; ++i) twice += __builtin_popcount(adj[i]);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u) {
    uint32_t above = adj[u] >> (u + 1) << (u + 1);
    while (above) {
      int v = __builtin_ctz(above);
      above &= above - 1;
      es.emplace_back(u, v);
    }
  }
  return es;
}

bool Graph::operator==(const Graph& o) const {
  if (n != o.n) return false;
  for (int i = 0; i < n; ++i)
    if (adj[i] != o.adj[i]) return false;
  return true;
}

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 1 || v < 1 || u > n || v > n) throw std::invalid_argument("vertex label out of range");
    g.add_edge(u - 1, v - 1);
  }
  return g;
}

Graph parse_edges(const std::string& text, int n) {
  std::vector<std::pair<int, int>> edges;
  int max_label = 0;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    long u, v;
    std::string trailing;
    if (!(ls >> u) || !(ls >> v) || (ls >> trailing)) {
      throw std::invalid_argument("malformed edge line " + std::to_string(lineno) + ": '" + line + "'");
    }
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u) +
                                            " on line " + std::to_string(lineno));
    if (u < 1 || v < 1 || u > Graph::kMaxVertices || v > Graph::kMaxVertices)
      throw std::invalid_argument("vertex label out of range on line " + std::to_string(lineno));
    if (n > 0 && (u > n || v > n))
      throw std::invalid_argument("vertex label exceeds declared n on line " + std::to_string(lineno));
    max_label = std::max({max_label, int(u), int(v)});
    edges.emplace_back(int(u), int(v));
  }
  int nv = n > 0 ? n : std::max(max_label, 1);
  return from_edges(nv, edges);
}

// ---- graph6 ---------------------------------------------------------------

std::string graph6_encode(const Graph& g) {
  std::string out;
  out.push_back(static_cast<char>(63 + g.n));
  int bits = 0, acc = 0;
  for (int j = 1; j < g.n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        bits = 0;
        acc = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

Graph graph6_decode(const std::string& code) {
  if (code.empty()) throw std::invalid_argument("graph6: empty string");
  int n = static_cast<unsigned char>(code[0]) - 63;
  if (n < 1 || n > Graph::kMaxVertices)
    throw std::invalid_argument("graph6: vertex count out of supported range 1..32");
  int nbits = n * (n - 1) / 2;
  int nbytes = (nbits + 5) / 6;
  if (static_cast<int>(code.size()) != 1 + nbytes)
    throw std::invalid_argument("graph6: wrong length for header n=" + std::to_string(n));
  Graph g(n);
  int bit = 0;
  for (int b = 0; b < nbytes; ++b) {
    int v = static_cast<unsigned char>(code[1 + b]) - 63;
    if (v < 0 || v > 63) throw std::invalid_argument("graph6: byte out of range");
    for (int k = 5; k >= 0; --k, ++bit) {
      int on = (v >> k) & 1;
      if (bit >= nbits) {
        if (on) throw std::invalid_argument("graph6: nonzero padding");
        continue;
      }
      if (on) {
        // bit index -> pair (i, j) in column-major upper-triangle order
        int j = 1;
        int idx = bit;
        while (idx >= j) idx -= j, ++j;
        g.add_edge(idx, j);
      }
    }
  }
  return g;
}

// ---- constructions --------------------------------------------------------

Graph induced_subgraph(const Graph& g, VertexSet x) {
  x &= g.vertices();
  if (x == 0) throw std::invalid_argument("induced subgraph on the empty set");
  std::vector<int> verts;
  for (uint32_t m = x; m; m &= m - 1) verts.push_back(__builtin_ctz(m));
  Graph h(static_cast<int>(verts.size()));
  for (size_t a = 0; a < verts.size(); ++a)
    for (size_t b = a + 1; b < verts.size(); ++b)
      if (g.has_edge(verts[a], verts[b])) h.add_edge(static_cast<int>(a), static_cast<int>(b));
  return h;
}

Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.n) throw std::invalid_argument("vertex out of range");
  if (g.n < 2) throw std::invalid_argument("cannot delete the last vertex");
  return induced_subgraph(g, g.vertices() & ~(1u << v));
}

Graph clique_close_at(const Graph& g, int v) {
  if (v < 0 || v >= g.n) throw std::invalid_argument("vertex out of range");
  Graph h = g;
  uint32_t nb = g.adj[v];
  for (uint32_t m = nb; m; m &= m - 1) {
    int u = __builtin_ctz(m);
    h.adj[u] |= nb & ~(1u << u);
  }
  return h;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  if (g1.n + g2.n > Graph::kMaxVertices)
    throw std::invalid_argument("disjoint union exceeds 32 vertices");
  Graph h(g1.n + g2.n);
  for (int i = 0; i < g1.n; ++i) h.adj[i] = g1.adj[i];
  for (int i = 0; i < g2.n; ++i) h.adj[g1.n + i] = g2.adj[i] << g1.n;
  return h;
}

Graph star_glue(const Graph& g1, int f1, const Graph& g2, int f2) {
  if (f1 < 0 || f1 >= g1.n || f2 < 0 || f2 >= g2.n)
    throw std::invalid_argument("vertex out of range");
  if (g1.degree(f1) != 1 || g2.degree(f2) != 1)
    throw std::invalid_argument("star glue requires pendant vertices");
  if (g1.n + g2.n - 1 > Graph::kMaxVertices)
    throw std::invalid_argument("glued graph exceeds 32 vertices");
  Graph h(g1.n + g2.n - 1);
  for (int i = 0; i < g1.n; ++i) h.adj[i] = g1.adj[i];
  // g2's vertices except f2 go after g1; edges at f2 reattach to f1.
  std::vector<int> map2(g2.n);
  int next = g1.n;
  for (int i = 0; i < g2.n; ++i) map2[i] = (i == f2) ? f1 : next++;
  for (auto [u, v] : g2.edges()) h.add_edge(map2[u], map2[v]);
  return h;
}

Graph circ_glue(const Graph& g1, int f1, const Graph& g2, int f2) {
  if (f1 < 0 || f1 >= g1.n || f2 < 0 || f2 >= g2.n)
    throw std::invalid_argument("vertex out of range");
  if (g1.degree(f1) != 1 || g2.degree(f2) != 1)
    throw std::invalid_argument("circ glue requires pendant vertices");
  int v1 = __builtin_ctz(g1.adj[f1]);
  int v2 = __builtin_ctz(g2.adj[f2]);
  if (g1.degree(v1) < 2 || g2.degree(v2) < 2)
    throw std::invalid_argument("circ glue requires pendant neighbors of degree >= 2");
  if (g1.n + g2.n - 3 > Graph::kMaxVertices)
    throw std::invalid_argument("glued graph exceeds 32 vertices");
  Graph h(g1.n + g2.n - 3);
  // g1 minus f1, order-preserving; then g2 minus {f2, v2}, with v2 merged
  // into v1's slot.
  std::vector<int> map1(g1.n, -1);
  int next = 0;
  for (int i = 0; i < g1.n; ++i)
    if (i != f1) map1[i] = next++;
  std::vector<int> map2(g2.n, -1);
  for (int i = 0; i < g2.n; ++i) {
    if (i == f2) continue;
    map2[i] = (i == v2) ? map1[v1] : next++;
  }
  for (auto [u, v] : g1.edges())
    if (u != f1 && v != f1) h.add_edge(map1[u], map1[v]);
  for (auto [u, v] : g2.edges())
    if (u != f2 && v != f2) h.add_edge(map2[u], map2[v]);
  return h;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> comps;
  uint32_t left = g.vertices();
  while (left) {
    uint32_t comp = 1u << __builtin_ctz(left);
    for (;;) {
      uint32_t grow = comp;
      for (uint32_t m = comp; m; m &= m - 1) grow |= g.adj[__builtin_ctz(m)];
      if (grow == comp) break;
      comp = grow;
    }
    comps.push_back(comp);
    left &= ~comp;
  }
  return comps;
}

int component_count(const Graph& g) { return static_cast<int>(connected_components(g).size()); }

bool is_connected(const Graph& g) { return component_count(g) == 1; }

// ---- families -------------------------------------------------------------

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite needs a, b >= 1");
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

Graph f_block(int m) {
  if (m < 1) throw std::invalid_argument("F_m needs m >= 1");
  Graph g(2 * m);
  for (int i = 1; i <= m; ++i)
    for (int j = i; j <= m; ++j) g.add_edge(2 * i - 1, 2 * j - 2);  // {2i, 2j-1} 1-indexed
  return g;
}

Graph compose_f_blocks(const CompositionSpec& spec) {
  if (spec.ms.empty()) throw std::invalid_argument("composition needs at least one block");
  Graph g = f_block(spec.ms[0]);
  int right_pendant = 2 * spec.ms[0] - 1;  // vertex 2m, 0-indexed
  for (size_t k = 1; k < spec.ms.size(); ++k) {
    int m = spec.ms[k];
    Graph fb = f_block(m);
    int n1 = g.n;
    g = circ_glue(g, right_pendant, fb, 0);
    // layout of circ_glue: g1 minus pendant, then fb minus {vertex 1, vertex 2};
    // fb's right pendant 2m sits at the end.
    right_pendant = (n1 - 1) + (2 * m - 2) - 1;
  }
  return g;
}

Graph fan_graph(const FanSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("fan base clique needs n >= 1");
  if (spec.parts.size() != spec.branch_sizes.size())
    throw std::invalid_argument("fan parts and branch size lists disagree");
  uint32_t seen = 0;
  for (const auto& part : spec.parts) {
    for (int v : part) {
      if (v < 1 || v > spec.n) throw std::invalid_argument("fan part vertex outside base clique");
      if (seen & (1u << (v - 1))) throw std::invalid_argument("fan parts overlap");
      seen |= 1u << (v - 1);
    }
  }
  int total = spec.n;
  for (size_t i = 0; i < spec.parts.size(); ++i) {
    const auto& sizes = spec.branch_sizes[i];
    if (sizes.size() > spec.parts[i].size())
      throw std::invalid_argument("more branches than part vertices");
    for (size_t j = 0; j < sizes.size(); ++j) {
      if (sizes[j] <= static_cast<int>(j) + 1)
        throw std::invalid_argument("fan branch size a_j must exceed j");
      total += sizes[j] - static_cast<int>(j) - 1;
    }
  }
  if (total > Graph::kMaxVertices) throw std::invalid_argument("fan exceeds 32 vertices");
  Graph g = complete_graph(spec.n);
  Graph h(total);
  for (int i = 0; i < spec.n; ++i) h.adj[i] = g.adj[i];
  int next = spec.n;
  for (size_t i = 0; i < spec.parts.size(); ++i) {
    for (size_t j = 0; j < spec.branch_sizes[i].size(); ++j) {
      int a = spec.branch_sizes[i][j];
      std::vector<int> clique;
      for (size_t t = 0; t <= j; ++t) clique.push_back(spec.parts[i][t] - 1);
      for (int t = 0; t < a - static_cast<int>(j) - 1; ++t) clique.push_back(next++);
      for (size_t x = 0; x < clique.size(); ++x)
        for (size_t y = x + 1; y < clique.size(); ++y)
          if (!h.has_edge(clique[x], clique[y])) h.add_edge(clique[x], clique[y]);
    }
  }
  return h;
}

Graph whiskered_cycle(int k, const std::vector<int>& whiskers) {
  if (k < 3) throw std::invalid_argument("whiskered cycle needs k >= 3");
  if (static_cast<int>(whiskers.size()) != k)
    throw std::invalid_argument("whisker count list must have one entry per cycle vertex");
  int extra = 0;
  for (int w : whiskers) {
    if (w < 0) throw std::invalid_argument("negative whisker count");
    extra += w;
  }
  if (k + extra > Graph::kMaxVertices) throw std::invalid_argument("whiskered cycle exceeds 32 vertices");
  Graph g(k + extra);
  for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
  int next = k;
  for (int i = 0; i < k; ++i)
    for (int w = 0; w < whiskers[i]; ++w) g.add_edge(i, next++);
  return g;
}

Graph fixture(const std::string& name) {
  if (name == "paper_fig1") {
    return from_edges(11, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {3, 4}, {4, 5},
                           {4, 6}, {6, 7}, {6, 8}, {6, 9}, {6, 10}, {9, 10}, {9, 11}, {10, 11}});
  }
  if (name == "paper_G1") {
    // Vertex 5 intentionally isolated so edge labels match {1,2,3,4,6}.
    return from_edges(6, {{1, 2}, {1, 4}, {2, 3}, {3, 4}, {4, 6}});
  }
  if (name == "paper_fig3_H") {
    // Corners 1,2,3; midpoints 4 (between 1,2), 5 (between 1,3), 6 (between 2,3).
    return from_edges(6, {{1, 4}, {2, 4}, {1, 5}, {3, 5}, {2, 6}, {3, 6}, {4, 5}, {4, 6}, {5, 6}});
  }
  if (name == "jewel") {
    return from_edges(10, {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}, {3, 7}, {3, 8}, {4, 9}, {4, 10}});
  }
  throw std::invalid_argument("unknown fixture: " + name);
}

std::vector<std::string> fixture_names() {
  return {"paper_fig1", "paper_G1", "paper_fig3_H", "jewel"};
}

// ---- canonical forms & enumeration ----------------------------------------

namespace {

// Column-major upper-triangle encoding, bit (i,j) for i<j; earlier bits more
// significant so integer order equals lexicographic order on the bit string.
uint64_t encode_upper(const Graph& g) {
  uint64_t v = 0;
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i) v = (v << 1) | (g.has_edge(i, j) ? 1u : 0u);
  return v;
}

struct CanonSearch {
  const Graph* g;
  int n;
  uint64_t best;
  int perm[Graph::kMaxVertices];
  bool strictly_less;  // only tracked in is_canonical mode
  bool stop_on_less;

  // depth = next position to fill; val = bits of columns 1..depth-1.
  void dfs(int depth, uint64_t val, int bits, uint32_t used) {
    if (depth == n) {
      if (val < best) {
        best = val;
        strictly_less = true;
      }
      return;
    }
    struct Cand {
      uint32_t col;
      int v;
    };
    Cand cands[Graph::kMaxVertices];
    int nc = 0;
    for (int v = 0; v < n; ++v) {
      if (used & (1u << v)) continue;
      uint32_t col = 0;
      for (int i = 0; i < depth; ++i) col = (col << 1) | (g->has_edge(perm[i], v) ? 1u : 0u);
      cands[nc++] = {col, v};
    }
    std::sort(cands, cands + nc, [](const Cand& a, const Cand& b) { return a.col < b.col; });
    for (int k = 0; k < nc; ++k) {
      if (stop_on_less && strictly_less) return;
      uint64_t nv = (val << depth) | cands[k].col;
      int nb = bits + depth;
      // prefix comparison against current best
      uint64_t bestprefix = best >> (n * (n - 1) / 2 - nb);
      if (nv > bestprefix) break;  // candidates sorted: the rest are larger too
      if (nv < bestprefix && stop_on_less) {
        strictly_less = true;  // any completion undercuts best
        return;
      }
      perm[depth] = cands[k].v;
      dfs(depth + 1, nv, nb, used | (1u << cands[k].v));
    }
  }
};

}  // namespace

uint64_t canonical_form(const Graph& g) {
  if (g.n > 11) throw std::invalid_argument("canonical form supported for n <= 11");
  if (g.n == 1) return 0;
  CanonSearch s{&g, g.n, encode_upper(g), {}, false, false};
  s.dfs(0, 0, 0, 0);
  return s.best;
}

namespace {

bool is_canonical(const Graph& g, uint64_t enc) {
  CanonSearch s{&g, g.n, enc, {}, false, true};
  s.dfs(0, 0, 0, 0);
  return !s.strictly_less;
}

Graph graph_from_upper_bits(int n, uint64_t bits) {
  Graph g(n);
  int total = n * (n - 1) / 2;
  int k = total - 1;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, --k)
      if ((bits >> k) & 1) g.add_edge(i, j);
  return g;
}

}  // namespace

std::vector<Graph> enumerate_connected(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("enumeration supported for 1 <= n <= 7");
  std::vector<Graph> out;
  if (n == 1) {
    out.push_back(Graph(1));
    return out;
  }
  int total = n * (n - 1) / 2;
  for (uint64_t bits = 0; bits < (uint64_t(1) << total); ++bits) {
    Graph g = graph_from_upper_bits(n, bits);
    if (g.edge_count() < n - 1) continue;
    if (!is_connected(g)) continue;
    if (is_canonical(g, bits)) out.push_back(g);
  }
  return out;
}

}  // namespace regwitness
