#pragma once

// Arithmetic in F_p for odd primes p < 2^40, plus the 64-bit modular
// helpers shared by primality testing and factorization.

#include <cstdint>
#include <utility>

namespace ecarm {

using Residue = std::uint64_t;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// floor(sqrt(n)).
std::uint64_t isqrt(std::uint64_t n);

/// An odd prime 3 <= p < 2^40. Construction validates primality.
class PrimeModulus {
 public:
  static constexpr std::uint64_t kMax = std::uint64_t{1} << 40;

  explicit PrimeModulus(std::uint64_t p);

  std::uint64_t value() const noexcept { return p_; }

  /// Reduces any signed value into [0, p).
  Residue reduce(std::int64_t v) const noexcept;

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  std::uint64_t p_;
};

namespace ff {

inline Residue add(Residue x, Residue y, const PrimeModulus& p) noexcept {
  Residue s = x + y;
  return s >= p.value() ? s - p.value() : s;
}

inline Residue sub(Residue x, Residue y, const PrimeModulus& p) noexcept {
  return x >= y ? x - y : x + p.value() - y;
}

inline Residue neg(Residue x, const PrimeModulus& p) noexcept {
  return x == 0 ? 0 : p.value() - x;
}

inline Residue mul(Residue x, Residue y, const PrimeModulus& p) noexcept {
  return static_cast<Residue>(static_cast<unsigned __int128>(x) * y % p.value());
}

Residue pow(Residue x, std::uint64_t e, const PrimeModulus& p) noexcept;

/// Throws ZeroInverse when x == 0 (mod p).
Residue inv(Residue x, const PrimeModulus& p);

/// Legendre symbol (x/p) in {-1, 0, 1}.
int legendre(Residue x, const PrimeModulus& p) noexcept;

/// Both square roots {r, p - r} with r <= p - r; {0, 0} for x == 0.
/// Throws NoRoot for non-residues.
std::pair<Residue, Residue> sqrt_mod(Residue x, const PrimeModulus& p);

}  // namespace ff
}  // namespace ecarm
