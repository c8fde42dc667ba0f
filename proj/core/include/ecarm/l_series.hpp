#pragma once

// Dirichlet coefficients a_n of L(E, s) = prod_p (1 - a_p p^-s + p^(1-2s))^-1
// over good primes, for n supported on good primes.

#include <cstdint>
#include <memory>

#include "ecarm/curve.hpp"
#include "ecarm/factor.hpp"
#include "ecarm/prime_store.hpp"

namespace ecarm {

/// a_{p^k} from a_{p^k} = a_p a_{p^(k-1)} - p a_{p^(k-2)}. Throws Overflow
/// instead of wrapping past 2^63 - 1 in magnitude.
std::int64_t a_prime_power(std::int64_t a_p, std::uint64_t p, unsigned k);

/// A curve together with the per-prime store its coefficients draw on.
class LCoefficientContext {
 public:
  explicit LCoefficientContext(CurveQ curve,
                               std::shared_ptr<PrimeStore> store = std::make_shared<PrimeStore>());

  const CurveQ& curve() const noexcept { return curve_; }
  PrimeStore& store() const noexcept { return *store_; }
  const std::shared_ptr<PrimeStore>& shared_store() const noexcept { return store_; }

  PrimeData prime(std::uint64_t p) const;
  std::int64_t trace(std::uint64_t p) const;
  std::uint64_t exponent(std::uint64_t p) const;

 private:
  CurveQ curve_;
  std::shared_ptr<PrimeStore> store_;
};

/// a_n for n >= 1. Throws BadPrimeFactor if a prime factor of n is bad.
std::int64_t l_coefficient(const LCoefficientContext& ctx, std::uint64_t n);
std::int64_t l_coefficient(const LCoefficientContext& ctx, const Factorization& n);

}  // namespace ecarm
