#include <doctest.h>

#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "ecarm/error.hpp"
#include "ecarm/l_series.hpp"
#include "oracles.hpp"

using namespace ecarm;

TEST_CASE("a_prime_power examples") {
  CHECK(a_prime_power(-3, 5, 0) == 1);
  CHECK(a_prime_power(-3, 5, 1) == -3);
  CHECK(a_prime_power(-3, 5, 2) == 4);
  CHECK(a_prime_power(-3, 5, 3) == 3);
}

TEST_CASE("a_prime_power matches the closed form") {
  for (std::int64_t p : {3, 5, 7, 11, 13, 101}) {
    const auto r = static_cast<std::int64_t>(std::sqrt(4.0 * static_cast<double>(p)));
    for (std::int64_t a = -r; a <= r; ++a) {
      for (unsigned k = 0; k <= 8; ++k) {
        REQUIRE(a_prime_power(a, static_cast<std::uint64_t>(p), k) ==
                oracle::prime_power_coefficient(a, p, k));
      }
    }
  }
}

TEST_CASE("a_prime_power reports overflow instead of wrapping") {
  CHECK_THROWS_AS(a_prime_power(2000000, 1000003, 40), Overflow);
  CHECK_NOTHROW(a_prime_power(0, 3, 70));  // (-3)^35 fits
  CHECK_THROWS_AS(a_prime_power(0, 3, 90), Overflow);
}

TEST_CASE("l_coefficient examples") {
  const LCoefficientContext ctx(CurveQ(1, 1));
  CHECK(l_coefficient(ctx, 1) == 1);
  CHECK(l_coefficient(ctx, 5) == -3);
  CHECK(l_coefficient(ctx, 7) == 3);
  CHECK(l_coefficient(ctx, 35) == -9);
  CHECK(l_coefficient(ctx, 55) == 6);
  try {
    l_coefficient(ctx, 6);
    FAIL("expected BadPrimeFactor");
  } catch (const BadPrimeFactor& e) {
    CHECK(e.prime() == 2);
  }
  CHECK_THROWS_AS(l_coefficient(ctx, 31 * 5), BadPrimeFactor);
  CHECK_THROWS_AS(l_coefficient(ctx, 0), std::invalid_argument);
}

TEST_CASE("l_coefficient matches the oracle for n <= 3000") {
  for (auto [a, b] : {std::pair{1, 1}, {-1, 1}, {2, 3}}) {
    const LCoefficientContext ctx(CurveQ(a, b));
    for (std::uint64_t n = 1; n <= 3000; ++n) {
      const auto ref = oracle::coefficient(a, b, n);
      if (ref) {
        REQUIRE(l_coefficient(ctx, n) == *ref);
      } else {
        REQUIRE_THROWS_AS(l_coefficient(ctx, n), BadPrimeFactor);
      }
    }
  }
}

TEST_CASE("multiplicativity on random coprime good-support pairs") {
  const LCoefficientContext ctx(CurveQ(1, 1));
  const CurveQ& E = ctx.curve();
  auto good_support = [&](std::uint64_t n) {
    for (const auto& [p, e] : factorize(n)) {
      if (!E.good_at(p)) return false;
    }
    return true;
  };
  std::mt19937_64 rng(6);
  int pairs = 0;
  while (pairs < 1000) {
    const std::uint64_t m = 1 + rng() % 1000, n = 1 + rng() % 1000;
    if (m * n > 1000000 || std::gcd(m, n) != 1 || !good_support(m) || !good_support(n)) continue;
    REQUIRE(l_coefficient(ctx, m * n) == l_coefficient(ctx, m) * l_coefficient(ctx, n));
    ++pairs;
  }
}

TEST_CASE("|a_n| <= d(n) sqrt(n)") {
  const LCoefficientContext ctx(CurveQ(-1, 1));
  for (std::uint64_t n = 1; n <= 20000; ++n) {
    const Factorization f = factorize(n);
    bool good = true;
    std::uint64_t divisors = 1;
    for (const auto& [p, e] : f) {
      good = good && ctx.curve().good_at(p);
      divisors *= e + 1;
    }
    if (!good) continue;
    const double bound = static_cast<double>(divisors) * std::sqrt(static_cast<double>(n));
    REQUIRE(std::abs(static_cast<double>(l_coefficient(ctx, n))) <= bound + 1e-9);
  }
}

TEST_CASE("factorization overload agrees with the integer one") {
  const LCoefficientContext ctx(CurveQ(2, 3));
  // 5 and 11 divide the discriminant of this curve
  for (std::uint64_t n : {1ull, 7ull, 49ull, 91ull, 1729ull, 999983ull * 7ull}) {
    CHECK(l_coefficient(ctx, factorize(n)) == l_coefficient(ctx, n));
  }
}
