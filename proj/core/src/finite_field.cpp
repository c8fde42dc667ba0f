#include "ecarm/finite_field.hpp"

#include <array>
#include <bit>
#include <stdexcept>
#include <string>

#include "ecarm/error.hpp"

namespace ecarm {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kWitnesses = {
      2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t q : kWitnesses) {
    if (n % q == 0) return n == q;
  }
  const std::uint64_t d_shift = std::countr_zero(n - 1);
  const std::uint64_t d = (n - 1) >> d_shift;
  // This witness set is exact below 3.3e24.
  for (std::uint64_t a : kWitnesses) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (std::uint64_t r = 1; r < d_shift; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t isqrt(std::uint64_t n) {
  if (n == 0) return 0;
  std::uint64_t r = static_cast<std::uint64_t>(__builtin_sqrtl(static_cast<long double>(n)));
  while (static_cast<unsigned __int128>(r) * r > n) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
  if (p < 3 || p >= kMax || !is_prime(p)) {
    throw std::invalid_argument("not an odd prime below 2^40: " + std::to_string(p));
  }
}

Residue PrimeModulus::reduce(std::int64_t v) const noexcept {
  const auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<Residue>(r);
}

namespace ff {

Residue pow(Residue x, std::uint64_t e, const PrimeModulus& p) noexcept {
  Residue result = 1;
  while (e != 0) {
    if (e & 1) result = mul(result, x, p);
    x = mul(x, x, p);
    e >>= 1;
  }
  return result;
}

Residue inv(Residue x, const PrimeModulus& p) {
  if (x % p.value() == 0) throw ZeroInverse();
  // Extended Euclid on signed values; p < 2^40 keeps everything in range.
  std::int64_t r0 = static_cast<std::int64_t>(p.value());
  std::int64_t r1 = static_cast<std::int64_t>(x % p.value());
  std::int64_t s0 = 0;
  std::int64_t s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return p.reduce(s0);
}

int legendre(Residue x, const PrimeModulus& p) noexcept {
  // Binary Jacobi symbol; p is an odd prime so it equals the Legendre symbol.
  std::uint64_t a = x % p.value();
  std::uint64_t n = p.value();
  int sign = 1;
  while (a != 0) {
    const int tz = std::countr_zero(a);
    a >>= tz;
    if ((tz & 1) && ((n & 7) == 3 || (n & 7) == 5)) sign = -sign;
    if ((a & 3) == 3 && (n & 3) == 3) sign = -sign;
    std::uint64_t t = n % a;
    n = a;
    a = t;
  }
  return n == 1 ? sign : 0;
}

std::pair<Residue, Residue> sqrt_mod(Residue x, const PrimeModulus& p) {
  x %= p.value();
  if (x == 0) return {0, 0};
  const int chi = legendre(x, p);
  if (chi != 1) throw NoRoot();

  const std::uint64_t q = p.value();
  Residue r;
  if ((q & 3) == 3) {
    r = pow(x, (q + 1) / 4, p);
  } else {
    // Tonelli-Shanks.
    const unsigned s = std::countr_zero(q - 1);
    const std::uint64_t odd = (q - 1) >> s;
    Residue z = 2;
    while (legendre(z, p) != -1) ++z;
    Residue c = pow(z, odd, p);
    Residue t = pow(x, odd, p);
    r = pow(x, (odd + 1) / 2, p);
    unsigned m = s;
    while (t != 1) {
      unsigned i = 0;
      Residue t2 = t;
      while (t2 != 1) {
        t2 = mul(t2, t2, p);
        ++i;
      }
      Residue b = c;
      for (unsigned j = 0; j + i + 1 < m; ++j) b = mul(b, b, p);
      m = i;
      c = mul(b, b, p);
      t = mul(t, c, p);
      r = mul(r, b, p);
    }
  }
  const Residue other = neg(r, p);
  return r <= other ? std::pair{r, other} : std::pair{other, r};
}

}  // namespace ff
}  // namespace ecarm
