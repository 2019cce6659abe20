#include "regwitness/homology.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "regwitness/gfp_kernels.hpp"

namespace regwitness {

SRComplex make_complex(int nv, std::vector<uint32_t> minimal_nonfaces) {
  if (nv < 0 || nv > 22) throw std::invalid_argument("complex supports at most 22 vertices");
  SRComplex c;
  c.nv = nv;
  std::sort(minimal_nonfaces.begin(), minimal_nonfaces.end());
  minimal_nonfaces.erase(std::unique(minimal_nonfaces.begin(), minimal_nonfaces.end()),
                         minimal_nonfaces.end());
  c.gens = std::move(minimal_nonfaces);
  size_t words = std::max<size_t>(1, (size_t(1) << nv) >> 6);
  c.nonface_bits.assign(words, 0);
  for (uint32_t g : c.gens) c.nonface_bits[g >> 6] |= uint64_t(1) << (g & 63);
  // superset closure, one variable at a time
  static constexpr uint64_t kPat[6] = {0x5555555555555555ull, 0x3333333333333333ull,
                                       0x0F0F0F0F0F0F0F0Full, 0x00FF00FF00FF00FFull,
                                       0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull};
  for (int v = 0; v < nv; ++v) {
    if (v < 6) {
      int stride = 1 << v;
      for (auto& w : c.nonface_bits) w |= (w & kPat[v]) << stride;
    } else {
      size_t block = size_t(1) << (v - 6);
      for (size_t base = 0; base < words; base += 2 * block)
        for (size_t i = 0; i < block; ++i) c.nonface_bits[base + block + i] |= c.nonface_bits[base + i];
    }
  }
  c.gens_at.assign(std::max(nv, 1), {});
  for (size_t i = 0; i < c.gens.size(); ++i)
    for (uint32_t m = c.gens[i]; m; m &= m - 1) c.gens_at[__builtin_ctz(m)].push_back(int(i));
  return c;
}

namespace {

void check_deadline(const ScanBudget& budget) {
  if (budget.deadline != std::chrono::steady_clock::time_point{} &&
      std::chrono::steady_clock::now() > budget.deadline)
    throw BudgetExceeded("homology scan: wall clock budget exceeded");
}

// Every vertex of sigma must lie in some minimal non-face inside sigma;
// otherwise the restriction is a cone and all reduced homology vanishes.
bool cone_free(const SRComplex& c, uint32_t sigma) {
  for (uint32_t m = sigma; m; m &= m - 1) {
    int v = __builtin_ctz(m);
    bool covered = false;
    for (int gi : c.gens_at[v]) {
      if ((c.gens[gi] & sigma) == c.gens[gi]) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

struct FaceTable {
  std::vector<std::vector<uint32_t>> by_size;
  int max_size = -1;  // -1 when the restriction is void
};

void collect_rec(const SRComplex& c, const int* vs, int nverts, uint32_t mask, int size, int start,
                 int minsize, int maxsize, FaceTable& out, size_t& count, size_t cap) {
  if (size >= minsize) {
    out.by_size[size].push_back(mask);
    if (++count > cap) throw BudgetExceeded("homology scan: face budget exceeded");
    out.max_size = std::max(out.max_size, size);
  }
  if (size == maxsize) return;
  for (int idx = start; idx < nverts; ++idx) {
    if (size + 1 + (nverts - idx - 1) < minsize) break;
    uint32_t next = mask | (1u << vs[idx]);
    if (c.face(next)) collect_rec(c, vs, nverts, next, size + 1, idx + 1, minsize, maxsize, out, count, cap);
  }
}

FaceTable collect_faces(const SRComplex& c, uint32_t sigma, int minsize, int maxsize,
                        const ScanBudget& budget) {
  FaceTable t;
  int k = __builtin_popcount(sigma);
  t.by_size.assign(k + 1, {});
  if (!c.face(0)) return t;  // unit ideal: the void complex
  int vs[22], nverts = 0;
  for (uint32_t m = sigma; m; m &= m - 1) vs[nverts++] = __builtin_ctz(m);
  size_t count = 0;
  collect_rec(c, vs, nverts, 0, 0, 0, minsize, maxsize < 0 ? k : maxsize, t, count,
              budget.max_faces_per_sigma);
  for (auto& cls : t.by_size) std::sort(cls.begin(), cls.end());
  return t;
}

}  // namespace

int dense_rank(std::vector<std::vector<uint32_t>>& rows, const Gfp& k) {
  const auto& kern = gfp::kernels();
  std::vector<std::pair<size_t, std::vector<uint32_t>>> pivots;
  int rank = 0;
  for (auto& row : rows) {
    for (auto& [pc, pr] : pivots) {
      uint32_t c = row[pc];
      if (c) kern.axpy(row.data(), pr.data(), k.p - c, row.size(), k.p);
    }
    size_t lead = row.size();
    for (size_t j = 0; j < row.size(); ++j)
      if (row[j]) {
        lead = j;
        break;
      }
    if (lead == row.size()) continue;
    if (row[lead] != 1) kern.scale(row.data(), k.inv(row[lead]), row.size(), k.p);
    pivots.emplace_back(lead, std::move(row));
    row.clear();
    ++rank;
  }
  return rank;
}

namespace {

// Rank of the boundary map from faces of size s (rows) to size s-1 (cols).
int boundary_rank(const std::vector<uint32_t>& upper, const std::vector<uint32_t>& lower,
                  const Gfp& k, const ScanBudget& budget) {
  if (upper.empty() || lower.empty()) return 0;
  if (upper.size() * lower.size() > budget.max_matrix_cells)
    throw BudgetExceeded("homology scan: matrix budget exceeded");
  std::vector<std::vector<uint32_t>> rows;
  rows.reserve(upper.size());
  for (uint32_t f : upper) {
    std::vector<uint32_t> row(lower.size(), 0);
    int pos = 0;
    for (uint32_t m = f; m; m &= m - 1, ++pos) {
      uint32_t bit = m & (0u - m);
      uint32_t sub = f ^ bit;
      auto it = std::lower_bound(lower.begin(), lower.end(), sub);
      size_t idx = size_t(it - lower.begin());
      row[idx] = (pos & 1) ? k.p - 1 : 1;
    }
    rows.push_back(std::move(row));
  }
  return dense_rank(rows, k);
}

// Largest degree d in [lo, dim] with nonzero reduced homology, or -2 if none.
int top_homology_from(const SRComplex& c, uint32_t sigma, int lo, const Gfp& k,
                      const ScanBudget& budget) {
  FaceTable t = collect_faces(c, sigma, lo, -1, budget);
  int top = t.max_size;  // dim + 1
  if (top - 1 < lo) return -2;
  std::vector<int> bd(top + 2, 0);
  for (int s = lo + 1; s <= top; ++s)
    bd[s] = boundary_rank(t.by_size[s], t.by_size[s - 1], k, budget);
  for (int d = top - 1; d >= lo; --d) {
    long h = long(t.by_size[d + 1].size()) - bd[d + 1] - (d + 2 <= top ? bd[d + 2] : 0);
    if (h > 0) return d;
  }
  return -2;
}

// dim of reduced homology in the single degree d (d >= 0).
long homology_dim_at(const SRComplex& c, uint32_t sigma, int d, const Gfp& k,
                     const ScanBudget& budget) {
  FaceTable t = collect_faces(c, sigma, d, d + 2, budget);
  if (int(t.by_size.size()) <= d + 1) return 0;
  long fd = long(t.by_size[d + 1].size());
  if (fd == 0) return 0;
  long r1 = boundary_rank(t.by_size[d + 1], t.by_size[d], k, budget);
  long r2 = (int(t.by_size.size()) > d + 2)
                ? boundary_rank(t.by_size[d + 2], t.by_size[d + 1], k, budget)
                : 0;
  return fd - r1 - r2;
}

std::vector<uint32_t> masks_of_popcount(int nv, int size) {
  std::vector<uint32_t> out;
  if (size == 0) {
    out.push_back(0);
    return out;
  }
  if (size > nv) return out;
  uint32_t v = (1u << size) - 1;
  uint32_t limit = nv == 32 ? ~0u : (1u << nv) - 1;
  while (v <= limit) {
    out.push_back(v);
    uint32_t t = v | (v - 1);
    if (t == ~0u) break;
    v = (t + 1) | (((~t & (t + 1)) - 1) >> (__builtin_ctz(v) + 1));
  }
  return out;
}

template <typename Fn>
void parallel_over(const std::vector<uint32_t>& items, int threads, Fn&& fn) {
  if (threads <= 1 || items.size() < 64) {
    for (uint32_t s : items) fn(s);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mu;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      try {
        for (;;) {
          size_t i = next.fetch_add(16);
          if (i >= items.size()) return;
          size_t end = std::min(items.size(), i + 16);
          for (size_t j = i; j < end; ++j) fn(items[j]);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lk(error_mu);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<int> reduced_homology_dims(const SRComplex& c, uint32_t sigma, const Gfp& k,
                                       const ScanBudget& budget) {
  int sz = __builtin_popcount(sigma);
  FaceTable t = collect_faces(c, sigma, 0, -1, budget);
  std::vector<int> dims(sz + 1, 0);  // dims[i] = degree i-1
  if (t.max_size < 0) return dims;   // void complex
  int top = t.max_size;
  std::vector<int> bd(top + 2, 0);
  for (int s = 1; s <= top; ++s) bd[s] = boundary_rank(t.by_size[s], t.by_size[s - 1], k, budget);
  for (int d = -1; d <= top - 1; ++d) {
    long h = long(t.by_size[d + 1].size()) - (d >= 0 ? bd[d + 1] : 0) -
             (d + 2 <= top ? bd[d + 2] : 0);
    dims[d + 1] = int(h);
  }
  return dims;
}

ScanOutcome sr_regularity_scan(const SRComplex& c, const Gfp& k, const ScanBudget& budget) {
  if (c.gens.empty()) return {0, 0, -1};
  for (uint32_t g : c.gens)
    if (g == 0) throw std::invalid_argument("unit ideal has no Stanley-Reisner complex");

  int init = 0;
  for (uint32_t g : c.gens) init = std::max(init, __builtin_popcount(g) - 1);
  std::atomic<int> best{init};

  // Phase 1: the regularity value, scanning subsets by increasing size with
  // running-max pruning. The value is schedule-independent: a subset is only
  // skipped when it provably cannot beat the final maximum.
  for (int size = 1; size <= c.nv; ++size) {
    if (size - 1 <= best.load()) continue;
    auto masks = masks_of_popcount(c.nv, size);
    std::atomic<int> counter{0};
    parallel_over(masks, budget.threads, [&](uint32_t sigma) {
      if ((counter.fetch_add(1) & 255) == 0) check_deadline(budget);
      int cur = best.load();
      if (size - 1 <= cur) return;
      if (c.face(sigma)) return;
      if (!cone_free(c, sigma)) return;
      int d = top_homology_from(c, sigma, cur, k, budget);
      if (d >= 0) {
        int r = d + 1;
        int prev = best.load();
        while (prev < r && !best.compare_exchange_weak(prev, r)) {
        }
      }
    });
  }

  ScanOutcome out;
  out.reg = best.load();
  if (out.reg == init) {
    // witness the largest minimal non-face directly
    uint32_t g0 = 0;
    for (uint32_t g : c.gens)
      if (__builtin_popcount(g) - 1 == init && (g0 == 0 || g < g0)) g0 = g;
    out.witness_sigma = g0;
    out.witness_degree = init - 1;
    return out;
  }

  // Phase 2: deterministic witness; smallest subset (by size then mask) with
  // homology in degree reg-1. Guaranteed to exist by phase 1.
  int d = out.reg - 1;
  for (int size = out.reg + 1; size <= c.nv; ++size) {
    auto masks = masks_of_popcount(c.nv, size);
    std::atomic<uint32_t> found{~0u};
    parallel_over(masks, budget.threads, [&](uint32_t sigma) {
      if (sigma >= found.load()) return;
      if (c.face(sigma) || !cone_free(c, sigma)) return;
      check_deadline(budget);
      if (homology_dim_at(c, sigma, d, k, budget) > 0) {
        uint32_t prev = found.load();
        while (sigma < prev && !found.compare_exchange_weak(prev, sigma)) {
        }
      }
    });
    if (found.load() != ~0u) {
      out.witness_sigma = found.load();
      out.witness_degree = d;
      return out;
    }
  }
  throw std::logic_error("regularity witness not found after a successful scan");
}

std::map<std::pair<int, int>, long> hochster_betti(const SRComplex& c, const Gfp& k,
                                                   const ScanBudget& budget) {
  std::map<std::pair<int, int>, long> betti;
  betti[{0, 0}] = 1;  // sigma = emptyset, degree -1
  if (c.gens.empty()) return betti;
  uint32_t full = c.nv == 32 ? ~0u : (1u << c.nv) - 1;
  for (uint32_t sigma = 1; sigma <= full && full; ++sigma) {
    if ((sigma & 255) == 0) check_deadline(budget);
    if (c.face(sigma) || !cone_free(c, sigma)) continue;
    int j = __builtin_popcount(sigma);
    auto dims = reduced_homology_dims(c, sigma, k, budget);
    for (int d = -1; d < j; ++d) {
      long h = dims[d + 1];
      if (h > 0) betti[{j - d - 1, j}] += h;
    }
    if (sigma == full) break;
  }
  return betti;
}

}  // namespace regwitness
