#include "lieperm/numtheory.hpp"

#include <gmpxx.h>

#include <numeric>
#include <stdexcept>

namespace lieperm::numtheory {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  if (n < (1ull << 31)) {
    if (n % 2 == 0) return n == 2;
    for (uint64_t d = 3; d * d <= n; d += 2)
      if (n % d == 0) return false;
    return true;
  }
  mpz_class z(static_cast<unsigned long>(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

std::optional<PrimePower> factor_prime_power(uint64_t q) {
  if (q < 2) return std::nullopt;
  uint64_t p = q;
  for (uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  int e = 0;
  uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) return std::nullopt;
  return PrimePower{p, e};
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t mod) {
  if (mod == 0) throw std::invalid_argument("pow_mod: zero modulus");
  unsigned __int128 acc = 1, b = base % mod;
  while (exp) {
    if (exp & 1) acc = acc * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<uint64_t>(acc);
}

static std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

uint64_t smallest_primitive_root(uint64_t ell) {
  if (!is_prime(ell)) throw std::invalid_argument("smallest_primitive_root: not a prime");
  if (ell == 2) return 1;
  const auto factors = prime_factors(ell - 1);
  for (uint64_t r = 2; r < ell; ++r) {
    bool generator = true;
    for (uint64_t f : factors) {
      if (pow_mod(r, (ell - 1) / f, ell) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return r;
  }
  throw std::logic_error("smallest_primitive_root: none found");  // unreachable
}

std::vector<uint64_t> primes_in_class(uint64_t r, uint64_t m, int count) {
  if (m == 0 || std::gcd(r % m, m) != 1)
    throw std::invalid_argument("primes_in_class: residue not coprime to modulus");
  std::vector<uint64_t> out;
  for (uint64_t p = r % m; static_cast<int>(out.size()) < count; p += m)
    if (is_prime(p)) out.push_back(p);
  return out;
}

}  // namespace lieperm::numtheory
