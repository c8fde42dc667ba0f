#include "ecarm/l_series.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "ecarm/error.hpp"
#include "ecarm/group_structure.hpp"
#include "ecarm/point_counting.hpp"

namespace ecarm {

namespace {

std::int64_t checked(__int128 v, const char* what) {
  constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
  if (v > kMax || v < -kMax) throw Overflow(std::string(what) + " exceeds 63 bits");
  return static_cast<std::int64_t>(v);
}

}  // namespace

std::int64_t a_prime_power(std::int64_t a_p, std::uint64_t p, unsigned k) {
  if (k == 0) return 1;
  std::int64_t prev = 1;
  std::int64_t cur = a_p;
  for (unsigned i = 2; i <= k; ++i) {
    const __int128 next = static_cast<__int128>(a_p) * cur - static_cast<__int128>(p) * prev;
    prev = cur;
    cur = checked(next, "a_{p^k}");
  }
  return cur;
}

LCoefficientContext::LCoefficientContext(CurveQ curve, std::shared_ptr<PrimeStore> store)
    : curve_(curve), store_(std::move(store)) {
  if (!store_) throw std::invalid_argument("LCoefficientContext needs a store");
}

PrimeData LCoefficientContext::prime(std::uint64_t p) const {
  return prime_data(curve_, p, *store_);
}

std::int64_t LCoefficientContext::trace(std::uint64_t p) const {
  return trace_ap(curve_, p, *store_);
}

std::uint64_t LCoefficientContext::exponent(std::uint64_t p) const {
  return exponent_tp(curve_, p, *store_);
}

std::int64_t l_coefficient(const LCoefficientContext& ctx, const Factorization& n) {
  for (const auto& [p, e] : n) {
    if (!ctx.curve().good_at(p)) throw BadPrimeFactor(p);
  }
  std::int64_t result = 1;
  for (const auto& [p, e] : n) {
    const std::int64_t factor = a_prime_power(ctx.trace(p), p, e);
    result = checked(static_cast<__int128>(result) * factor, "a_n");
  }
  return result;
}

std::int64_t l_coefficient(const LCoefficientContext& ctx, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("a_n is defined for n >= 1");
  return l_coefficient(ctx, factorize(n));
}

}  // namespace ecarm
