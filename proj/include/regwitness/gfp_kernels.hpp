#pragma once

#include <cstddef>
#include <cstdint>

namespace regwitness::gfp {

/// Row kernels for dense GF(p) linear algebra (boundary-matrix elimination).
///
/// Contract shared by every variant: all inputs reduced mod p, p prime with
/// p < 2^15, outputs reduced mod p. r and b must not alias unless r == b.
struct Kernels {
  /// r[i] = (r[i] + c * b[i]) mod p
  void (*axpy)(uint32_t* r, const uint32_t* b, uint32_t c, size_t len, uint32_t p);
  /// r[i] = (c * r[i]) mod p
  void (*scale)(uint32_t* r, uint32_t c, size_t len, uint32_t p);
  const char* name;
};

/// Portable reference implementation.
const Kernels& scalar_kernels();

/// SIMD variants; null when the build target or the running CPU lacks them.
const Kernels* avx2_kernels();
const Kernels* neon_kernels();

/// Kernels selected once at startup: best available SIMD variant, overridable
/// with REGWITNESS_KERNEL=scalar|avx2|neon.
const Kernels& kernels();

}  // namespace regwitness::gfp
