// AVX2 variants of the GF(p) row kernels. Compiled with -mavx2; selection is
// still a runtime decision (see gfp_kernels.cpp), so this translation unit
// must only be entered via the dispatch table.

#include "regwitness/gfp_kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace regwitness::gfp {

namespace {

// Barrett reduction of t < 2^30 by p < 2^15 using M = floor(2^32/p):
// q = (t*M) >> 32 lands in {floor(t/p)-1, floor(t/p)}, so one conditional
// subtract after t - q*p brings the value below p.
inline __m256i reduce30(__m256i t, __m256i vM, __m256i vp) {
  __m256i q_even = _mm256_srli_epi64(_mm256_mul_epu32(t, vM), 32);
  __m256i t_odd = _mm256_srli_epi64(t, 32);
  __m256i q_odd = _mm256_srli_epi64(_mm256_mul_epu32(t_odd, vM), 32);
  __m256i q = _mm256_or_si256(q_even, _mm256_slli_epi64(q_odd, 32));
  __m256i r = _mm256_sub_epi32(t, _mm256_mullo_epi32(q, vp));
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, vp));
}

void axpy_avx2(uint32_t* r, const uint32_t* b, uint32_t c, size_t len, uint32_t p) {
  const uint32_t M = static_cast<uint32_t>((uint64_t(1) << 32) / p);
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vM = _mm256_set1_epi32(static_cast<int>(M));
  size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(r + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i t = _mm256_add_epi32(va, _mm256_mullo_epi32(vc, vb));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(r + i), reduce30(t, vM, vp));
  }
  for (; i < len; ++i) r[i] = (r[i] + c * b[i]) % p;
}

void scale_avx2(uint32_t* r, uint32_t c, size_t len, uint32_t p) {
  const uint32_t M = static_cast<uint32_t>((uint64_t(1) << 32) / p);
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vM = _mm256_set1_epi32(static_cast<int>(M));
  size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(r + i));
    __m256i t = _mm256_mullo_epi32(vc, va);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(r + i), reduce30(t, vM, vp));
  }
  for (; i < len; ++i) r[i] = c * r[i] % p;
}

const Kernels g_avx2 = {axpy_avx2, scale_avx2, "avx2"};

}  // namespace

const Kernels* avx2_kernels() {
  return __builtin_cpu_supports("avx2") ? &g_avx2 : nullptr;
}

}  // namespace regwitness::gfp

#else

namespace regwitness::gfp {
const Kernels* avx2_kernels() { return nullptr; }
}  // namespace regwitness::gfp

#endif
