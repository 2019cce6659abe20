#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

#include "regwitness/gfp.hpp"

namespace regwitness {

inline constexpr int kMaxTotalVars = 24;

/// An m x n grid of variables x_{i,j} plus an optional elimination variable t.
/// The monomial order is lexicographic with t > x_{1,1} > x_{1,2} > ... >
/// x_{1,n} > x_{2,1} > ... > x_{m,n}; for m = 2 this is the classical
/// x_1 > ... > x_n > y_1 > ... > y_n.
struct VarGrid {
  int rows = 2;
  int cols = 1;
  bool aux = false;

  VarGrid() = default;
  VarGrid(int m, int n, bool with_aux = false);

  int total() const { return rows * cols + (aux ? 1 : 0); }
  int index(int i, int j) const { return (aux ? 1 : 0) + i * cols + j; }  // 0-based
  int aux_index() const { return 0; }
  std::string var_name(int v) const;

  bool operator==(const VarGrid& o) const {
    return rows == o.rows && cols == o.cols && aux == o.aux;
  }
};

/// Exponent vector; position 0 is the greatest variable, so byte-wise
/// lexicographic comparison realizes the lex order.
struct Monomial {
  std::array<uint8_t, kMaxTotalVars> e{};

  int degree(int nvars) const {
    int d = 0;
    for (int i = 0; i < nvars; ++i) d += e[i];
    return d;
  }
  bool is_one(int nvars) const {
    for (int i = 0; i < nvars; ++i)
      if (e[i]) return false;
    return true;
  }
  bool operator==(const Monomial& o) const { return e == o.e; }
};

inline int mono_cmp(const Monomial& a, const Monomial& b, int nvars) {
  return std::memcmp(a.e.data(), b.e.data(), static_cast<size_t>(nvars));
}
inline bool mono_divides(const Monomial& a, const Monomial& b, int nvars) {
  for (int i = 0; i < nvars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}
Monomial mono_mul(const Monomial& a, const Monomial& b, int nvars);
Monomial mono_div(const Monomial& a, const Monomial& b, int nvars);  // pre: b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b, int nvars);
bool mono_squarefree(const Monomial& a, int nvars);
uint32_t mono_support(const Monomial& a, int nvars);

struct Term {
  Monomial m;
  uint32_t c = 0;
};

/// Terms in strictly decreasing lex order, no zero coefficients.
struct Polynomial {
  std::vector<Term> terms;

  bool zero() const { return terms.empty(); }
  const Term& lt() const { return terms.front(); }
  int degree(int nvars) const { return zero() ? -1 : terms.front().m.degree(nvars); }
  bool operator==(const Polynomial& o) const;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b, int nvars, const Gfp& k);
Polynomial poly_scale(const Polynomial& a, uint32_t c, const Gfp& k);
/// a + c * t * b for a single term t.
Polynomial poly_add_mul_term(const Polynomial& a, const Polynomial& b, const Monomial& t,
                             uint32_t c, int nvars, const Gfp& k);
Polynomial poly_from_terms(std::vector<Term> terms, int nvars, const Gfp& k);

std::string monomial_to_string(const Monomial& m, const VarGrid& grid);
std::string poly_to_string(const Polynomial& p, const VarGrid& grid, const Gfp& k);

}  // namespace regwitness
