#include "regwitness/gfp_kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

namespace regwitness::gfp {

namespace {

void axpy_scalar(uint32_t* r, const uint32_t* b, uint32_t c, size_t len, uint32_t p) {
  // c < p < 2^15 and values < p, so r[i] + c*b[i] < 2^30: no widening needed.
  for (size_t i = 0; i < len; ++i) r[i] = (r[i] + c * b[i]) % p;
}

void scale_scalar(uint32_t* r, uint32_t c, size_t len, uint32_t p) {
  for (size_t i = 0; i < len; ++i) r[i] = c * r[i] % p;
}

const Kernels g_scalar = {axpy_scalar, scale_scalar, "scalar"};

}  // namespace

const Kernels& scalar_kernels() { return g_scalar; }

const Kernels& kernels() {
  static const Kernels* selected = [] {
    const char* want = std::getenv("REGWITNESS_KERNEL");
    if (want) {
      std::string w = want;
      if (w == "scalar") return &g_scalar;
      if (w == "avx2") {
        const Kernels* k = avx2_kernels();
        if (!k) throw std::runtime_error("REGWITNESS_KERNEL=avx2 but AVX2 unavailable");
        return k;
      }
      if (w == "neon") {
        const Kernels* k = neon_kernels();
        if (!k) throw std::runtime_error("REGWITNESS_KERNEL=neon but NEON unavailable");
        return k;
      }
      throw std::runtime_error("unknown REGWITNESS_KERNEL value: " + w);
    }
    if (const Kernels* k = avx2_kernels()) return k;
    if (const Kernels* k = neon_kernels()) return k;
    return &g_scalar;
  }();
  return *selected;
}

}  // namespace regwitness::gfp
