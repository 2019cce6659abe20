#pragma once

#include <map>
#include <optional>
#include <vector>

#include "regwitness/graph.hpp"

namespace regwitness {

struct CliqueReport {
  std::vector<VertexSet> maximal_cliques;  // complete, irredundant, sorted
  int clique_count = 0;                    // C(G)
  int clique_number = 0;                   // omega(G)
};

/// Maximal-clique enumeration (Bron-Kerbosch with pivoting on bitmasks).
CliqueReport clique_report(const Graph& g);

/// Vertices contained in at least two maximal cliques; iv(G) = popcount.
VertexSet internal_vertices(const Graph& g);

/// eta(G): maximum size of a clique-disjoint edge set, via exact maximum
/// independent set on the conflict graph whose nodes are E(G) and whose
/// conflicts join e, e' whenever their endpoint union induces a complete
/// subgraph.
int eta(const Graph& g);

/// gamma_m(G) = sum over components of min{m - omega(G_i) - 1, -1}; m >= 2.
int gamma_m(const Graph& g, int m);

/// dim of the clique complex per component, in component order:
/// max{omega - 1, 1} when the component has an edge, 0 otherwise.
std::vector<int> clique_complex_dims(const Graph& g);

/// ell(G): edge count of a longest induced path (exact search).
int longest_induced_path(const Graph& g);

/// ma(G): maximum matching size (exact search).
int matching_number(const Graph& g);

struct PendantProfile {
  std::vector<int> cdeg;  // maximal cliques containing v
  std::vector<int> pdeg;  // pendant neighbors of v
  std::vector<int> type;  // 1, 2, or 0 for neither
  int alpha = 0;          // number of type-1 vertices
  int pv = 0;             // number of pendant vertices
};
PendantProfile pendant_profile(const Graph& g);

struct ClassFlags {
  bool tree = false;
  bool bipartite = false;
  bool chordal = false;
  bool block_graph = false;
  bool cactus = false;  // every block a cycle or an edge
  bool caterpillar = false;
  bool lobster = false;
  bool indecomposable = false;         // no vertex of clique degree 2
  std::optional<bool> closed;          // n <= 9: existential over labelings
  std::optional<bool> traceable;       // n <= 20
  std::optional<bool> accessible;      // n <= 12
};
ClassFlags classify(const Graph& g);

bool is_tree(const Graph& g);  // connected and acyclic
bool is_bipartite(const Graph& g);
bool is_chordal(const Graph& g);
bool is_closed(const Graph& g);  // n <= 9
bool is_traceable(const Graph& g);  // n <= 20
bool is_path(const Graph& g);
bool is_cycle(const Graph& g);
bool is_complete(const Graph& g);
/// (a, b) when G is a complete bipartite graph K_{a,b}, a <= b.
std::optional<std::pair<int, int>> complete_bipartite_parts(const Graph& g);

struct BlockDecomposition {
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices = 0;
};
BlockDecomposition blocks_and_cutvertices(const Graph& g);
bool blocks_are_cycles_or_cliques(const Graph& g);

struct SpineParams {
  std::vector<int> spine;  // vertex sequence (0-indexed)
  int length = 0;          // edges
  int limbs = 0;           // t: off-spine stars with center adjacent to the spine
  int whiskers = 0;        // r: pendant edges attached to the spine
  int e2 = 0;              // off-spine edges with both endpoint degrees <= 2
  int d3 = 0;              // off-spine vertices of degree >= 3
};

/// Spine of a tree: the lexicographically least longest path.
SpineParams spine_params(const Graph& tree);
/// One record per longest path (each path canonicalized against reversal).
std::vector<SpineParams> spine_params_all(const Graph& tree);

struct CactusParams {
  int c_prime = 0;
  std::map<int, int> cycle_counts;  // k -> number of cycle blocks of length k >= 4
};
/// Pre: every block of G is a cycle or a clique.
CactusParams cactus_params(const Graph& g);

/// All cut sets per the accessibility definition; n <= 12.
std::vector<VertexSet> cut_sets(const Graph& g);
bool is_accessible(const Graph& g);  // n <= 12

/// True iff some subgraph (not necessarily induced) of the tree is the jewel.
bool contains_jewel_subgraph(const Graph& tree);

struct CmBipartiteParams {
  int alpha = 0;            // alpha_G
  std::optional<Graph> h;   // H_G, absent when its vertex set {2..t-1} is empty
  int ma = 0;               // matching number of H_G
};
/// Pre: t >= 2, all m_i >= 3.
CmBipartiteParams cm_bipartite_params(const CompositionSpec& spec);

}  // namespace regwitness
