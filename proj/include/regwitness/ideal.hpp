#pragma once

#include <stdexcept>

#include "regwitness/graph.hpp"
#include "regwitness/poly.hpp"

namespace regwitness {

/// Raised when a configured resource cap is hit; computations fail loudly
/// instead of returning a possibly-wrong basis.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BuchbergerBudget {
  long max_pairs = 200000;
  size_t max_terms = 500000;   // per polynomial
  size_t max_basis = 20000;
};

struct Ideal {
  VarGrid grid;
  std::vector<Polynomial> gens;
};

/// Reduced Groebner basis under the grid's lex order: elements monic, tails
/// fully reduced, no leading term divides another, sorted by decreasing
/// leading term.
struct GroebnerBasis {
  VarGrid grid;
  std::vector<Polynomial> elems;
};

/// J_G: one generator x_i y_j - x_j y_i per edge {i,j}, i < j, monic.
Ideal build_bei(const Graph& g, const Gfp& k);

/// J_{K_m,G}: x_{ik} x_{jl} - x_{il} x_{jk} over row pairs i < j and edges
/// {k,l}, k < l; C(m,2) * e(G) generators, ordered row pair first.
Ideal build_gbei(const Graph& g, int m, const Gfp& k);

/// Generators of J_{K_m,G минус v}: same grid, edges avoiding v only.
Ideal build_gbei_without_vertex(const Graph& g, int m, int v, const Gfp& k);

/// P_v = (x_{i,v} : 1 <= i <= m).
Ideal column_ideal(const VarGrid& grid, int v);

Ideal ideal_sum(const Ideal& a, const Ideal& b);

/// Remainder of f on division by B (all monic); no term of the result is
/// divisible by any leading term of B. When quotients is non-null it receives
/// one polynomial per element of B with f = sum q_i b_i + r.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const VarGrid& grid, const Gfp& k,
                       std::vector<Polynomial>* quotients = nullptr);

GroebnerBasis buchberger(const Ideal& ideal, const Gfp& k,
                         const BuchbergerBudget& budget = {});

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const VarGrid& grid,
                        const Gfp& k);

/// Leading terms of the reduced basis, minimalized.
Ideal initial_ideal(const GroebnerBasis& gb);

/// Pre: all generators are monomials.
bool is_squarefree(const Ideal& monomial_ideal);

/// I cap J by eliminating an auxiliary variable t from t*I + (1-t)*J.
Ideal ideal_intersection(const Ideal& a, const Ideal& b, const Gfp& k,
                         const BuchbergerBudget& budget = {});

/// Termwise equality of reduced Groebner bases.
bool ideal_equal(const Ideal& a, const Ideal& b, const Gfp& k,
                 const BuchbergerBudget& budget = {});

}  // namespace regwitness
