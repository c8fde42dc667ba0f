#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "ecarm/factor.hpp"
#include "ecarm/finite_field.hpp"

namespace ecarm {

/// Factors every integer of a window [lo, hi) at once by striking out the
/// sieving primes up to sqrt(limit); what remains of each entry is 1 or a
/// single large prime. Windows are independent, so disjoint windows may be
/// processed concurrently from one const instance.
class SegmentedFactorSieve {
 public:
  static constexpr std::size_t kMaxDistinct = 15;  // 2*3*...*53 > 2^64

  explicit SegmentedFactorSieve(std::uint64_t limit)
      : limit_(limit), primes_(primes_up_to(isqrt(limit))) {}

  std::uint64_t limit() const noexcept { return limit_; }

  /// Calls visit(n, span<const PrimePower>) for n in [lo, hi), ascending,
  /// with the factors in increasing order. Requires 1 <= lo and hi <= limit + 1.
  template <typename Visit>
  void for_each(std::uint64_t lo, std::uint64_t hi, Visit&& visit) const {
    if (lo == 0 || hi > limit_ + 1) throw std::invalid_argument("window outside [1, limit]");
    if (lo >= hi) return;
    const std::size_t len = hi - lo;
    std::vector<std::uint64_t> rest(len);
    std::vector<unsigned char> count(len, 0);
    std::vector<PrimePower> slots(len * kMaxDistinct);
    for (std::size_t i = 0; i < len; ++i) rest[i] = lo + i;

    for (std::uint64_t q : primes_) {
      if (q * q >= hi) break;
      std::uint64_t first = (lo + q - 1) / q * q;
      for (std::uint64_t m = first; m < hi; m += q) {
        const std::size_t i = m - lo;
        unsigned e = 0;
        do {
          rest[i] /= q;
          ++e;
        } while (rest[i] % q == 0);
        slots[i * kMaxDistinct + count[i]++] = {q, e};
      }
    }
    for (std::size_t i = 0; i < len; ++i) {
      if (rest[i] > 1) slots[i * kMaxDistinct + count[i]++] = {rest[i], 1};
      visit(lo + i, std::span<const PrimePower>(slots.data() + i * kMaxDistinct, count[i]));
    }
  }

 private:
  std::uint64_t limit_;
  std::vector<std::uint64_t> primes_;
};

}  // namespace ecarm
