#include "regwitness/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace regwitness {

VarGrid::VarGrid(int m, int n, bool with_aux) : rows(m), cols(n), aux(with_aux) {
  if (m < 2) throw std::invalid_argument("variable grid needs m >= 2 rows");
  if (n < 1) throw std::invalid_argument("variable grid needs n >= 1 columns");
  if (total() > kMaxTotalVars)
    throw std::invalid_argument("variable grid exceeds " + std::to_string(kMaxTotalVars) +
                                " variables");
}

std::string VarGrid::var_name(int v) const {
  if (aux) {
    if (v == 0) return "t";
    --v;
  }
  int i = v / cols, j = v % cols;
  if (rows == 2) return (i == 0 ? "x" : "y") + std::to_string(j + 1);
  return "x[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
}

Monomial mono_mul(const Monomial& a, const Monomial& b, int nvars) {
  Monomial r;
  for (int i = 0; i < nvars; ++i) {
    int s = a.e[i] + b.e[i];
    if (s > 255) throw std::overflow_error("monomial exponent overflow");
    r.e[i] = static_cast<uint8_t>(s);
  }
  return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b, int nvars) {
  Monomial r;
  for (int i = 0; i < nvars; ++i) {
    if (b.e[i] > a.e[i]) throw std::invalid_argument("monomial division not exact");
    r.e[i] = static_cast<uint8_t>(a.e[i] - b.e[i]);
  }
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b, int nvars) {
  Monomial r;
  for (int i = 0; i < nvars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

bool mono_squarefree(const Monomial& a, int nvars) {
  for (int i = 0; i < nvars; ++i)
    if (a.e[i] > 1) return false;
  return true;
}

uint32_t mono_support(const Monomial& a, int nvars) {
  uint32_t s = 0;
  for (int i = 0; i < nvars; ++i)
    if (a.e[i]) s |= 1u << i;
  return s;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms.size() != o.terms.size()) return false;
  for (size_t i = 0; i < terms.size(); ++i)
    if (terms[i].c != o.terms[i].c || !(terms[i].m == o.terms[i].m)) return false;
  return true;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b, int nvars, const Gfp& k) {
  Polynomial r;
  r.terms.reserve(a.terms.size() + b.terms.size());
  size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    int c = mono_cmp(a.terms[i].m, b.terms[j].m, nvars);
    if (c > 0) {
      r.terms.push_back(a.terms[i++]);
    } else if (c < 0) {
      r.terms.push_back(b.terms[j++]);
    } else {
      uint32_t s = k.add(a.terms[i].c, b.terms[j].c);
      if (s) r.terms.push_back({a.terms[i].m, s});
      ++i, ++j;
    }
  }
  for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
  for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
  return r;
}

Polynomial poly_scale(const Polynomial& a, uint32_t c, const Gfp& k) {
  Polynomial r;
  if (c == 0) return r;
  r.terms.reserve(a.terms.size());
  for (const Term& t : a.terms) r.terms.push_back({t.m, k.mul(t.c, c)});
  return r;
}

Polynomial poly_add_mul_term(const Polynomial& a, const Polynomial& b, const Monomial& t,
                             uint32_t c, int nvars, const Gfp& k) {
  Polynomial shifted;
  shifted.terms.reserve(b.terms.size());
  for (const Term& bt : b.terms) {
    uint32_t cc = k.mul(bt.c, c);
    if (cc) shifted.terms.push_back({mono_mul(bt.m, t, nvars), cc});
  }
  return poly_add(a, shifted, nvars, k);
}

Polynomial poly_from_terms(std::vector<Term> terms, int nvars, const Gfp& k) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return mono_cmp(a.m, b.m, nvars) > 0; });
  Polynomial r;
  for (const Term& t : terms) {
    if (!r.terms.empty() && mono_cmp(r.terms.back().m, t.m, nvars) == 0) {
      r.terms.back().c = k.add(r.terms.back().c, t.c);
    } else {
      r.terms.push_back(t);
    }
  }
  std::erase_if(r.terms, [](const Term& t) { return t.c == 0; });
  return r;
}

std::string monomial_to_string(const Monomial& m, const VarGrid& grid) {
  std::string s;
  for (int v = 0; v < grid.total(); ++v) {
    if (!m.e[v]) continue;
    if (!s.empty()) s += "*";
    s += grid.var_name(v);
    if (m.e[v] > 1) s += "^" + std::to_string(int(m.e[v]));
  }
  return s.empty() ? "1" : s;
}

std::string poly_to_string(const Polynomial& p, const VarGrid& grid, const Gfp& k) {
  if (p.zero()) return "0";
  std::string s;
  for (size_t i = 0; i < p.terms.size(); ++i) {
    uint32_t c = p.terms[i].c;
    bool negative = c > k.p / 2;
    uint32_t mag = negative ? k.p - c : c;
    if (i == 0) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    std::string mono = monomial_to_string(p.terms[i].m, grid);
    if (mag == 1 && mono != "1") {
      s += mono;
    } else if (mono == "1") {
      s += std::to_string(mag);
    } else {
      s += std::to_string(mag) + "*" + mono;
    }
  }
  return s;
}

}  // namespace regwitness
