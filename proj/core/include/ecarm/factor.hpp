#pragma once

#include <cstdint>
#include <vector>

namespace ecarm {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Primes strictly increasing, exponents >= 1.
using Factorization = std::vector<PrimePower>;

/// Complete factorization of 1 <= n < 2^62: trial division by primes up to
/// 10^5, then Brent's variant of Pollard rho with c = 1, 2, 3, ...
Factorization factorize(std::uint64_t n);

/// Product of the prime powers.
std::uint64_t expand(const Factorization& f);

/// All primes <= limit, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

}  // namespace ecarm
