#pragma once

#include <cstdint>
#include <stdexcept>

namespace regwitness {

/// Arithmetic in the prime field GF(p).
///
/// The characteristic is capped at 2^15 so that a + c*b with a, b, c < p
/// stays below 2^30 and fits in a uint32 without widening; the row kernels
/// in gfp_kernels.hpp rely on this.
struct Gfp {
  uint32_t p;

  explicit Gfp(uint32_t prime);

  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p - b; }
  uint32_t mul(uint32_t a, uint32_t b) const { return a * b % p; }
  uint32_t neg(uint32_t a) const { return a ? p - a : 0; }
  uint32_t pow(uint32_t a, uint64_t e) const;
  uint32_t inv(uint32_t a) const;
};

bool is_prime_u32(uint32_t v);

inline constexpr uint32_t kDefaultFieldChar = 32003;
inline constexpr uint32_t kMaxFieldChar = 32767;  // < 2^15, see Gfp

}  // namespace regwitness
