#include "ecarm/factor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ecarm/finite_field.hpp"

namespace ecarm {

namespace {

constexpr std::uint64_t kTrialBound = 100000;

const std::vector<std::uint64_t>& trial_primes() {
  static const std::vector<std::uint64_t> primes = primes_up_to(kTrialBound);
  return primes;
}

std::uint64_t brent_rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    const auto f = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
    std::uint64_t y = 2;
    std::uint64_t x = y;
    std::uint64_t g = 1;
    std::uint64_t q = 1;
    std::uint64_t ys = y;
    constexpr std::uint64_t kBatch = 128;
    for (std::uint64_t r = 1; g == 1; r <<= 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      // Batched gcd overshot; replay one step at a time.
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const std::uint64_t d = brent_rho(n);
  split(d, out);
  split(n / d, out);
}

}  // namespace

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0 || n >= (std::uint64_t{1} << 62)) {
    throw std::invalid_argument("factorize expects 1 <= n < 2^62");
  }
  Factorization result;
  for (std::uint64_t q : trial_primes()) {
    if (q * q > n) break;
    if (n % q != 0) continue;
    unsigned e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    result.push_back({q, e});
  }
  if (n == 1) return result;

  std::vector<std::uint64_t> large;
  split(n, large);
  std::sort(large.begin(), large.end());
  for (std::uint64_t q : large) {
    if (!result.empty() && result.back().prime == q) {
      ++result.back().exponent;
    } else {
      result.push_back({q, 1});
    }
  }
  return result;
}

std::uint64_t expand(const Factorization& f) {
  std::uint64_t n = 1;
  for (const auto& [q, e] : f) {
    for (unsigned i = 0; i < e; ++i) n *= q;
  }
  return n;
}

}  // namespace ecarm
