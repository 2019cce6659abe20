#include "regwitness/ideal.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace regwitness {

namespace {

Polynomial two_by_two_minor(const VarGrid& grid, int i, int j, int kcol, int lcol, const Gfp& k) {
  // x_{i,k} x_{j,l} - x_{i,l} x_{j,k}; with i<j, k<l the first product leads.
  Polynomial p;
  Term lead, trail;
  lead.c = 1;
  lead.m.e[grid.index(i, kcol)] += 1;
  lead.m.e[grid.index(j, lcol)] += 1;
  trail.c = k.neg(1);
  trail.m.e[grid.index(i, lcol)] += 1;
  trail.m.e[grid.index(j, kcol)] += 1;
  p.terms = {lead, trail};
  return p;
}

}  // namespace

Ideal build_gbei(const Graph& g, int m, const Gfp& k) {
  if (m < 2) throw std::invalid_argument("generalized binomial edge ideal needs m >= 2");
  Ideal ideal{VarGrid(m, g.n), {}};
  auto es = g.edges();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (auto [u, v] : es) ideal.gens.push_back(two_by_two_minor(ideal.grid, i, j, u, v, k));
  return ideal;
}

Ideal build_bei(const Graph& g, const Gfp& k) { return build_gbei(g, 2, k); }

Ideal build_gbei_without_vertex(const Graph& g, int m, int v, const Gfp& k) {
  if (m < 2) throw std::invalid_argument("generalized binomial edge ideal needs m >= 2");
  if (v < 0 || v >= g.n) throw std::invalid_argument("vertex out of range");
  Ideal ideal{VarGrid(m, g.n), {}};
  auto es = g.edges();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (auto [u, w] : es) {
        if (u == v || w == v) continue;
        ideal.gens.push_back(two_by_two_minor(ideal.grid, i, j, u, w, k));
      }
  return ideal;
}

Ideal column_ideal(const VarGrid& grid, int v) {
  if (v < 0 || v >= grid.cols) throw std::invalid_argument("column out of range");
  Ideal ideal{grid, {}};
  for (int i = 0; i < grid.rows; ++i) {
    Polynomial p;
    Term t;
    t.c = 1;
    t.m.e[grid.index(i, v)] = 1;
    p.terms = {t};
    ideal.gens.push_back(p);
  }
  return ideal;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (!(a.grid == b.grid)) throw std::invalid_argument("ideal sum needs a common variable grid");
  Ideal r = a;
  r.gens.insert(r.gens.end(), b.gens.begin(), b.gens.end());
  return r;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const VarGrid& grid, const Gfp& k, std::vector<Polynomial>* quotients) {
  const int nv = grid.total();
  if (quotients) quotients->assign(basis.size(), Polynomial{});
  Polynomial rem;
  Polynomial h = f;
  while (!h.zero()) {
    const Term& top = h.lt();
    bool reduced = false;
    for (size_t b = 0; b < basis.size(); ++b) {
      if (basis[b].zero()) continue;
      if (!mono_divides(basis[b].lt().m, top.m, nv)) continue;
      Monomial q = mono_div(top.m, basis[b].lt().m, nv);
      uint32_t c = k.neg(top.c);  // basis monic: subtract top.c * q * b
      h = poly_add_mul_term(h, basis[b], q, c, nv, k);
      if (quotients) {
        Polynomial one;
        one.terms = {{q, top.c}};
        (*quotients)[b] = poly_add((*quotients)[b], one, nv, k);
      }
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.terms.push_back(top);
      h.terms.erase(h.terms.begin());
    }
  }
  return rem;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const VarGrid& grid,
                        const Gfp& k) {
  const int nv = grid.total();
  Monomial l = mono_lcm(f.lt().m, g.lt().m, nv);
  Monomial qf = mono_div(l, f.lt().m, nv);
  Monomial qg = mono_div(l, g.lt().m, nv);
  // f, g monic: S = qf*f - qg*g
  Polynomial s;
  s = poly_add_mul_term(s, f, qf, 1, nv, k);
  s = poly_add_mul_term(s, g, qg, k.neg(1), nv, k);
  return s;
}

namespace {

Polynomial make_monic(const Polynomial& p, const Gfp& k) {
  if (p.zero() || p.lt().c == 1) return p;
  return poly_scale(p, k.inv(p.lt().c), k);
}

struct PairKey {
  int deg;
  Monomial lcm;
  int i, j;
};

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const Gfp& k, const BuchbergerBudget& budget) {
  const VarGrid& grid = ideal.grid;
  const int nv = grid.total();

  std::vector<Polynomial> basis;
  bool all_binomial = true;
  for (const Polynomial& g : ideal.gens) {
    if (g.zero()) continue;
    if (g.terms.size() > 2) all_binomial = false;
    basis.push_back(make_monic(g, k));
  }

  auto pair_less = [&](const PairKey& a, const PairKey& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = mono_cmp(a.lcm, b.lcm, nv);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };

  std::vector<PairKey> pending;
  std::set<std::pair<int, int>> pending_set;
  auto push_pair = [&](int i, int j) {
    PairKey pk{0, mono_lcm(basis[i].lt().m, basis[j].lt().m, nv), i, j};
    pk.deg = pk.lcm.degree(nv);
    pending.push_back(pk);
    std::push_heap(pending.begin(), pending.end(),
                   [&](const PairKey& a, const PairKey& b) { return pair_less(b, a); });
    pending_set.insert({i, j});
  };

  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) push_pair(static_cast<int>(i), static_cast<int>(j));

  long pairs_done = 0;
  while (!pending.empty()) {
    std::pop_heap(pending.begin(), pending.end(),
                  [&](const PairKey& a, const PairKey& b) { return pair_less(b, a); });
    PairKey pk = pending.back();
    pending.pop_back();
    pending_set.erase({pk.i, pk.j});

    if (++pairs_done > budget.max_pairs) throw BudgetExceeded("buchberger: pair budget exceeded");

    const Polynomial &f = basis[pk.i], &g = basis[pk.j];
    // first criterion: coprime leading terms
    Monomial prod = mono_mul(f.lt().m, g.lt().m, nv);
    if (mono_cmp(prod, pk.lcm, nv) == 0) continue;
    // chain criterion: some k with LT_k | lcm and both flanking pairs settled
    bool skip = false;
    for (size_t t = 0; t < basis.size() && !skip; ++t) {
      int ti = static_cast<int>(t);
      if (ti == pk.i || ti == pk.j || basis[t].zero()) continue;
      if (!mono_divides(basis[t].lt().m, pk.lcm, nv)) continue;
      auto key1 = std::minmax(pk.i, ti);
      auto key2 = std::minmax(pk.j, ti);
      if (!pending_set.count({key1.first, key1.second}) &&
          !pending_set.count({key2.first, key2.second}))
        skip = true;
    }
    if (skip) continue;

    Polynomial s = s_polynomial(f, g, grid, k);
    Polynomial r = normal_form(s, basis, grid, k);
    if (r.zero()) continue;
    if (all_binomial && r.terms.size() > 2)
      throw std::logic_error("binomial closure violated in Buchberger loop");
    if (r.terms.size() > budget.max_terms) throw BudgetExceeded("buchberger: term budget exceeded");
    r = make_monic(r, k);
    basis.push_back(r);
    if (basis.size() > budget.max_basis) throw BudgetExceeded("buchberger: basis budget exceeded");
    int newi = static_cast<int>(basis.size()) - 1;
    for (int t = 0; t < newi; ++t)
      if (!basis[t].zero()) push_pair(t, newi);
  }

  // minimalize: drop elements whose leading term is divisible by another's
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].zero()) continue;
    bool keep = true;
    for (size_t j = 0; j < basis.size() && keep; ++j) {
      if (i == j || basis[j].zero()) continue;
      int c = mono_cmp(basis[j].lt().m, basis[i].lt().m, nv);
      if (c == 0 ? j < i : mono_divides(basis[j].lt().m, basis[i].lt().m, nv)) keep = false;
    }
    if (keep) minimal.push_back(basis[i]);
  }
  // reduce the tails against the other elements
  std::vector<Polynomial> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(make_monic(normal_form(minimal[i], others, grid, k), k));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return mono_cmp(a.lt().m, b.lt().m, nv) > 0;
  });
  return {grid, reduced};
}

Ideal initial_ideal(const GroebnerBasis& gb) {
  const int nv = gb.grid.total();
  std::vector<Monomial> lts;
  for (const Polynomial& g : gb.elems)
    if (!g.zero()) lts.push_back(g.lt().m);
  Ideal out{gb.grid, {}};
  for (size_t i = 0; i < lts.size(); ++i) {
    bool minimal = true;
    for (size_t j = 0; j < lts.size() && minimal; ++j) {
      if (i == j) continue;
      int c = mono_cmp(lts[j], lts[i], nv);
      if (c == 0 ? j < i : mono_divides(lts[j], lts[i], nv)) minimal = false;
    }
    if (minimal) {
      Polynomial p;
      p.terms = {{lts[i], 1}};
      out.gens.push_back(p);
    }
  }
  std::sort(out.gens.begin(), out.gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    return mono_cmp(a.lt().m, b.lt().m, nv) > 0;
  });
  return out;
}

bool is_squarefree(const Ideal& monomial_ideal) {
  const int nv = monomial_ideal.grid.total();
  for (const Polynomial& g : monomial_ideal.gens) {
    if (g.terms.size() != 1)
      throw std::invalid_argument("is_squarefree expects a monomial ideal");
    if (!mono_squarefree(g.lt().m, nv)) return false;
  }
  return true;
}

namespace {

Monomial lift_monomial(const Monomial& m, int nvars, int aux_exp) {
  Monomial r;
  r.e[0] = static_cast<uint8_t>(aux_exp);
  for (int i = 0; i < nvars; ++i) r.e[i + 1] = m.e[i];
  return r;
}

Monomial drop_aux(const Monomial& m, int nvars) {
  Monomial r;
  for (int i = 0; i < nvars; ++i) r.e[i] = m.e[i + 1];
  return r;
}

}  // namespace

Ideal ideal_intersection(const Ideal& a, const Ideal& b, const Gfp& k,
                         const BuchbergerBudget& budget) {
  if (!(a.grid == b.grid))
    throw std::invalid_argument("ideal intersection needs a common variable grid");
  if (a.grid.aux) throw std::invalid_argument("nested elimination not supported");
  const int nv = a.grid.total();
  VarGrid ext(a.grid.rows, a.grid.cols, true);
  const int env = ext.total();
  Ideal big{ext, {}};
  for (const Polynomial& f : a.gens) {
    if (f.zero()) continue;
    Polynomial p;  // t * f
    for (const Term& t : f.terms) p.terms.push_back({lift_monomial(t.m, nv, 1), t.c});
    big.gens.push_back(p);
  }
  for (const Polynomial& g : b.gens) {
    if (g.zero()) continue;
    std::vector<Term> ts;  // (1 - t) * g
    for (const Term& t : g.terms) {
      ts.push_back({lift_monomial(t.m, nv, 0), t.c});
      ts.push_back({lift_monomial(t.m, nv, 1), k.neg(t.c)});
    }
    big.gens.push_back(poly_from_terms(std::move(ts), env, k));
  }
  GroebnerBasis gb = buchberger(big, k, budget);
  Ideal out{a.grid, {}};
  for (const Polynomial& g : gb.elems) {
    if (g.zero() || g.lt().m.e[0] != 0) continue;
    Polynomial p;
    for (const Term& t : g.terms) {
      if (t.m.e[0] != 0) throw std::logic_error("elimination left an auxiliary variable in a tail");
      p.terms.push_back({drop_aux(t.m, nv), t.c});
    }
    out.gens.push_back(p);
  }
  return out;
}

bool ideal_equal(const Ideal& a, const Ideal& b, const Gfp& k, const BuchbergerBudget& budget) {
  if (!(a.grid == b.grid)) throw std::invalid_argument("ideal comparison needs a common grid");
  GroebnerBasis ga = buchberger(a, k, budget);
  GroebnerBasis gb = buchberger(b, k, budget);
  if (ga.elems.size() != gb.elems.size()) return false;
  for (size_t i = 0; i < ga.elems.size(); ++i)
    if (!(ga.elems[i] == gb.elems[i])) return false;
  return true;
}

}  // namespace regwitness
