#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace regwitness {

/// Subset of the vertices of some host graph, one bit per vertex (bit i is
/// vertex i+1 in the 1-indexed external labeling).
using VertexSet = uint32_t;

inline int vcount(VertexSet s) { return __builtin_popcount(s); }

/// Labeled simple graph on vertices 1..n, n <= 32, adjacency kept as one
/// machine-word bitmask per vertex. Internally vertices are 0-indexed; the
/// public construction and rendering layers are 1-indexed.
///
/// Invariants: adjacency symmetric, diagonal empty. Every operation returning
/// a Graph preserves both.
struct Graph {
  static constexpr int kMaxVertices = 32;

  int n = 1;
  std::array<uint32_t, kMaxVertices> adj{};

  Graph() = default;
  explicit Graph(int vertices);

  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
  void add_edge(int u, int v);  // 0-indexed, u != v

  VertexSet vertices() const { return n == 32 ? ~0u : (1u << n) - 1; }
  VertexSet neighbors(int v) const { return adj[v]; }
  int degree(int v) const { return __builtin_popcount(adj[v]); }
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // 0-indexed, u < v, sorted

  bool operator==(const Graph& o) const;
};

/// Builds a graph from 1-indexed edge pairs.
Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

/// Parses edge-list text: one "u v" pair per line, 1-indexed, '#' starts a
/// comment, blank lines ignored. Duplicate edges are deduplicated. When n is
/// 0 the vertex count is the largest label seen (at least 1).
/// Throws std::invalid_argument on malformed lines, loops, or labels out of
/// range.
Graph parse_edges(const std::string& text, int n = 0);

/// graph6 interchange (the >>graph6<< ASCII format, n <= 32).
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& code);

/// Induced subgraph on X (nonempty), relabeled 1..|X| preserving label order.
Graph induced_subgraph(const Graph& g, VertexSet x);

/// G minus one vertex (0-indexed); requires n >= 2.
Graph delete_vertex(const Graph& g, int v);

/// G_v: G with N(v) completed to a clique; vertex set unchanged.
Graph clique_close_at(const Graph& g, int v);

/// Disjoint union; labels of g2 shifted past g1.
Graph disjoint_union(const Graph& g1, const Graph& g2);

/// Operation *: identify the pendant vertices f1 of g1 and f2 of g2
/// (0-indexed). The merged vertex keeps g1's label.
Graph star_glue(const Graph& g1, int f1, const Graph& g2, int f2);

/// Operation o: remove pendants f1, f2 and identify their neighbors v1, v2;
/// requires deg(v_i) >= 2. n = n1 + n2 - 3.
Graph circ_glue(const Graph& g1, int f1, const Graph& g2, int f2);

std::vector<VertexSet> connected_components(const Graph& g);
int component_count(const Graph& g);
bool is_connected(const Graph& g);

// ---- named families ------------------------------------------------------

Graph path_graph(int n);             // n >= 1
Graph cycle_graph(int n);            // n >= 3
Graph complete_graph(int n);         // n >= 1
Graph complete_bipartite(int a, int b);

/// F_m, the bipartite block on [2m] with edges {2i, 2j-1}, 1 <= i <= j <= m.
Graph f_block(int m);

/// F_{m_1} o F_{m_2} o ... o F_{m_t}; each m_i >= 3 except t == 1 where any
/// m_1 >= 1 is allowed.
struct CompositionSpec {
  std::vector<int> ms;
};
Graph compose_f_blocks(const CompositionSpec& spec);

/// Fan attachment data: a partition W_1 u ... u W_k of W within [n], each
/// part with branch clique sizes a_{i,j} > j.
struct FanSpec {
  int n = 1;                                  // base clique size
  std::vector<std::vector<int>> parts;        // 1-indexed base vertices
  std::vector<std::vector<int>> branch_sizes; // per part, a_{i,1..r_i}
};
Graph fan_graph(const FanSpec& spec);

/// Cycle C_k with whiskers[i] pendant edges at cycle vertex i+1.
Graph whiskered_cycle(int k, const std::vector<int>& whiskers);

/// Fixtures addressable by name: paper_fig1, paper_G1, paper_fig3_H, jewel.
Graph fixture(const std::string& name);
std::vector<std::string> fixture_names();

/// One representative per isomorphism class of connected simple graphs on n
/// vertices, 1 <= n <= 7, in canonical-form order.
std::vector<Graph> enumerate_connected(int n);

/// Minimal adjacency encoding over all relabelings; two graphs are isomorphic
/// iff their canonical forms coincide. Exact search pruned by prefix
/// comparison and degree partitioning.
uint64_t canonical_form(const Graph& g);

}  // namespace regwitness
