#include "regwitness/gfp.hpp"

#include <string>

namespace regwitness {

bool is_prime_u32(uint32_t v) {
  if (v < 2) return false;
  for (uint32_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

Gfp::Gfp(uint32_t prime) : p(prime) {
  if (!is_prime_u32(prime) || prime > kMaxFieldChar)
    throw std::invalid_argument("field characteristic must be a prime <= " +
                                std::to_string(kMaxFieldChar) + ", got " + std::to_string(prime));
}

uint32_t Gfp::pow(uint32_t a, uint64_t e) const {
  uint64_t base = a % p, acc = 1;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<uint32_t>(acc);
}

uint32_t Gfp::inv(uint32_t a) const {
  if (a == 0) throw std::invalid_argument("division by zero in GF(p)");
  // Extended Euclid on (a, p); p prime so gcd is 1.
  int64_t t = 0, newt = 1;
  int64_t r = p, newr = a % p;
  while (newr != 0) {
    int64_t q = r / newr;
    t -= q * newt; std::swap(t, newt);
    r -= q * newr; std::swap(r, newr);
  }
  if (t < 0) t += p;
  return static_cast<uint32_t>(t);
}

}  // namespace regwitness
