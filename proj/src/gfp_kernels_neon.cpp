// NEON variants of the GF(p) row kernels (aarch64).

#include "regwitness/gfp_kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace regwitness::gfp {

namespace {

// Same Barrett scheme as the AVX2 path: t < 2^30, M = floor(2^32/p),
// q = (t*M) >> 32 is off by at most one, fixed with a conditional subtract.
inline uint32x4_t reduce30(uint32x4_t t, uint32x4_t vM, uint32x4_t vp) {
  uint64x2_t lo = vmull_u32(vget_low_u32(t), vget_low_u32(vM));
  uint64x2_t hi = vmull_u32(vget_high_u32(t), vget_high_u32(vM));
  uint32x4_t q = vcombine_u32(vmovn_u64(vshrq_n_u64(lo, 32)), vmovn_u64(vshrq_n_u64(hi, 32)));
  uint32x4_t r = vmlsq_u32(t, q, vp);
  return vminq_u32(r, vsubq_u32(r, vp));
}

void axpy_neon(uint32_t* r, const uint32_t* b, uint32_t c, size_t len, uint32_t p) {
  const uint32_t M = static_cast<uint32_t>((uint64_t(1) << 32) / p);
  const uint32x4_t vc = vdupq_n_u32(c);
  const uint32x4_t vp = vdupq_n_u32(p);
  const uint32x4_t vM = vdupq_n_u32(M);
  size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    uint32x4_t t = vmlaq_u32(vld1q_u32(r + i), vc, vld1q_u32(b + i));
    vst1q_u32(r + i, reduce30(t, vM, vp));
  }
  for (; i < len; ++i) r[i] = (r[i] + c * b[i]) % p;
}

void scale_neon(uint32_t* r, uint32_t c, size_t len, uint32_t p) {
  const uint32_t M = static_cast<uint32_t>((uint64_t(1) << 32) / p);
  const uint32x4_t vc = vdupq_n_u32(c);
  const uint32x4_t vp = vdupq_n_u32(p);
  const uint32x4_t vM = vdupq_n_u32(M);
  size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    uint32x4_t t = vmulq_u32(vc, vld1q_u32(r + i));
    vst1q_u32(r + i, reduce30(t, vM, vp));
  }
  for (; i < len; ++i) r[i] = c * r[i] % p;
}

const Kernels g_neon = {axpy_neon, scale_neon, "neon"};

}  // namespace

const Kernels* neon_kernels() { return &g_neon; }

}  // namespace regwitness::gfp

#else

namespace regwitness::gfp {
const Kernels* neon_kernels() { return nullptr; }
}  // namespace regwitness::gfp

#endif
