#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace lieperm::numtheory {

/// Deterministic for n < 2^31 (trial division); larger inputs use GMP's
/// Baillie-PSW + Miller-Rabin, which has no known pseudoprimes below 2^64.
bool is_prime(uint64_t n);

/// q = p^e with p prime, e >= 1; nullopt if q is not a prime power (or < 2).
struct PrimePower {
  uint64_t p;
  int e;
};
std::optional<PrimePower> factor_prime_power(uint64_t q);

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t mod);

/// Smallest generator of (Z/ell)^* for an odd prime ell (returns 1 for ell=2).
uint64_t smallest_primitive_root(uint64_t ell);

/// First `count` primes congruent to r mod m (gcd(r, m) = 1), ascending.
std::vector<uint64_t> primes_in_class(uint64_t r, uint64_t m, int count);

}  // namespace lieperm::numtheory
