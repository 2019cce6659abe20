#pragma once

#include <chrono>
#include <map>
#include <vector>

#include "regwitness/gfp.hpp"
#include "regwitness/ideal.hpp"

namespace regwitness {

/// Stanley-Reisner complex of a squarefree monomial ideal, presented by its
/// minimal non-faces (the generator supports). Face membership is answered
/// from a precomputed bitmap over all 2^nv subsets, nv <= 22.
struct SRComplex {
  int nv = 0;
  std::vector<uint32_t> gens;            // minimal non-faces
  std::vector<uint64_t> nonface_bits;    // superset closure of gens
  std::vector<std::vector<int>> gens_at; // generator indices touching vertex v

  bool face(uint32_t s) const { return !((nonface_bits[s >> 6] >> (s & 63)) & 1); }
};

SRComplex make_complex(int nv, std::vector<uint32_t> minimal_nonfaces);

struct ScanBudget {
  size_t max_faces_per_sigma = 4000000;
  size_t max_matrix_cells = 64000000;
  std::chrono::steady_clock::time_point deadline{};  // default: none
  int threads = 1;
};

/// Dims of reduced homology of the restriction to sigma over GF(p), indexed
/// so that out[i] is the dim in degree i-1 (degrees -1 .. |sigma|-1). The
/// complex {emptyset} has one class in degree -1; the void complex has none.
std::vector<int> reduced_homology_dims(const SRComplex& c, uint32_t sigma, const Gfp& k,
                                       const ScanBudget& budget = {});

struct ScanOutcome {
  int reg = 0;
  uint32_t witness_sigma = 0;
  int witness_degree = -1;
};

/// reg(S/M) of the squarefree monomial ideal behind the complex:
/// max{ d+1 : exists sigma with nonzero reduced homology in degree d }.
/// Deterministic in result and witness for any thread count.
ScanOutcome sr_regularity_scan(const SRComplex& c, const Gfp& k, const ScanBudget& budget = {});

/// Graded Betti numbers beta_{i,j} of S/M by the full Hochster sum.
std::map<std::pair<int, int>, long> hochster_betti(const SRComplex& c, const Gfp& k,
                                                   const ScanBudget& budget = {});

/// Rank of a dense matrix over GF(p); rows are consumed. Exposed for the
/// kernel equivalence tests.
int dense_rank(std::vector<std::vector<uint32_t>>& rows, const Gfp& k);

}  // namespace regwitness
