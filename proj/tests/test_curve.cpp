#include <doctest.h>

#include <algorithm>
#include <random>

#include "ecarm/curve.hpp"
#include "ecarm/error.hpp"
#include "oracles.hpp"

using namespace ecarm;

namespace {

const CurveFp kE5 = reduce_curve(CurveQ(1, 1), 5);

Point random_point(const CurveFp& C, std::mt19937_64& rng) {
  for (;;) {
    const Residue x = rng() % C.p();
    const Residue f = C.rhs(x);
    if (ff::legendre(f, C.modulus()) == -1) continue;
    const auto [r, s] = ff::sqrt_mod(f, C.modulus());
    return Point::affine(x, rng() % 2 ? r : s);
  }
}

}  // namespace

TEST_CASE("CurveQ discriminant and validation") {
  const CurveQ E(1, 1);
  CHECK(E.delta0() == -16 * 31);
  CHECK_THROWS_AS(CurveQ(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(CurveQ(-3, 2), std::invalid_argument);  // 4(-27) + 27*4 = 0
  CHECK_THROWS_AS(CurveQ(std::int64_t{1} << 31, 1), std::invalid_argument);
  CHECK_NOTHROW(CurveQ((std::int64_t{1} << 31) - 1, -((std::int64_t{1} << 31) - 1)));
  CHECK(int128_to_string(CurveQ(-1, 1).delta0()) == "-368");
}

TEST_CASE("CurveQ::parse") {
  CHECK(CurveQ::parse("1,1") == CurveQ(1, 1));
  CHECK(CurveQ::parse("-1,1") == CurveQ(-1, 1));
  CHECK(CurveQ::parse(" 2 , 3 ") == CurveQ(2, 3));
  CHECK_THROWS_AS(CurveQ::parse("1"), std::invalid_argument);
  CHECK_THROWS_AS(CurveQ::parse("1,2,3"), std::invalid_argument);
  CHECK_THROWS_AS(CurveQ::parse("a,1"), std::invalid_argument);
  CHECK_THROWS_AS(CurveQ::parse("1,"), std::invalid_argument);
}

TEST_CASE("reduce_curve") {
  const CurveQ E(1, 1);
  CHECK_THROWS_AS(reduce_curve(E, 2), BadReduction);
  try {
    reduce_curve(E, 31);
    FAIL("expected BadReduction");
  } catch (const BadReduction& e) {
    CHECK(e.prime() == 31);
  }
  const CurveFp C = reduce_curve(E, 5);
  CHECK(C.p() == 5);
  CHECK(C.a() == 1);
  CHECK(C.b() == 1);
  // p = 3 is admitted when 3 does not divide the discriminant
  CHECK_NOTHROW(reduce_curve(E, 3));
  CHECK_THROWS_AS(reduce_curve(CurveQ(3, 1), 3), BadReduction);
  // negative coefficients reduce into [0, p)
  const CurveFp D = reduce_curve(CurveQ(-1, -2), 7);
  CHECK(D.a() == 6);
  CHECK(D.b() == 5);
}

TEST_CASE("ec_add examples") {
  const Point P = Point::affine(0, 1);
  CHECK(ec_add(kE5, P, Point::at_infinity()) == P);
  CHECK(ec_add(kE5, Point::at_infinity(), P) == P);
  CHECK(ec_add(kE5, P, Point::affine(0, 4)).infinity);
  const Point R = ec_add(kE5, P, Point::affine(2, 1));
  CHECK(R == Point::affine(3, 4));
  CHECK(kE5.contains(Point::affine(2, 1)));
  CHECK(kE5.contains(R));
}

TEST_CASE("ec_scalar_mul examples") {
  const Point P = Point::affine(0, 1);
  CHECK(ec_scalar_mul(kE5, 0, P).infinity);
  CHECK(ec_scalar_mul(kE5, 1, P) == P);
  CHECK(ec_scalar_mul(kE5, 9, P).infinity);
  CHECK_FALSE(ec_scalar_mul(kE5, 3, P).infinity);
  CHECK(ec_scalar_mul(kE5, 3, P) == Point::affine(2, 1));
  CHECK(ec_scalar_mul_signed(kE5, -1, P) == Point::affine(0, 4));
  CHECK(ec_scalar_mul_signed(kE5, -9, P).infinity);
}

TEST_CASE("enumerate_points") {
  const auto pts5 = enumerate_points(kE5);
  CHECK(pts5.size() == 9);
  CHECK(pts5.front().infinity);
  CHECK(enumerate_points(reduce_curve(CurveQ(1, 1), 7)).size() == 5);
  for (const Point& P : pts5) CHECK(kE5.contains(P));
  CHECK_THROWS_AS(enumerate_points(reduce_curve(CurveQ(1, 1), 1048583)), OracleLimitExceeded);

  for (std::uint64_t q : oracle::primes_between(3, 300)) {
    if (!oracle::good_prime(2, 3, q)) continue;
    const CurveFp C = reduce_curve(CurveQ(2, 3), q);
    const auto pts = enumerate_points(C);
    REQUIRE(pts.size() == oracle::group_order(2, 3, static_cast<std::int64_t>(q)));
    std::int64_t chi_sum = 0;
    for (Residue x = 0; x < q; ++x) chi_sum += ff::legendre(C.rhs(x), C.modulus());
    REQUIRE(static_cast<std::int64_t>(pts.size()) == static_cast<std::int64_t>(q) + 1 + chi_sum);
  }
}

TEST_CASE("sample_point") {
  CHECK(sample_point(kE5, 0) == Point::affine(0, 1));
  CHECK(sample_point(kE5, 1) == Point::affine(2, 1));
  CHECK(sample_point(kE5, 5) == sample_point(kE5, 0));
  const CurveFp C = reduce_curve(CurveQ(-1, 1), 1009);
  for (std::uint64_t i = 0; i < 50; ++i) {
    const Point P = sample_point(C, i * 17);
    REQUIRE(C.contains(P));
    REQUIRE(sample_point(C, i * 17) == P);
  }
  const CurveFp T = reduce_curve(CurveQ(1, 2), 3);
  CHECK(T.contains(sample_point(T, 0)));
}

TEST_CASE("group law: commutativity and associativity for all p <= 200") {
  std::mt19937_64 rng(11);
  for (std::uint64_t q : oracle::primes_between(3, 200)) {
    for (auto [a, b] : {std::pair{1, 1}, {-1, 1}, {2, 3}}) {
      if (!oracle::good_prime(a, b, q)) continue;
      const CurveFp C = reduce_curve(CurveQ(a, b), q);
      for (int i = 0; i < 100; ++i) {
        const Point P = random_point(C, rng), Q = random_point(C, rng), R = random_point(C, rng);
        REQUIRE(ec_add(C, P, Q) == ec_add(C, Q, P));
        REQUIRE(ec_add(C, ec_add(C, P, Q), R) == ec_add(C, P, ec_add(C, Q, R)));
        REQUIRE(C.contains(ec_add(C, P, Q)));
        REQUIRE(ec_add(C, P, ec_neg(C, P)).infinity);
      }
    }
  }
}

TEST_CASE("scalar multiplication is additive in k") {
  std::mt19937_64 rng(12);
  const CurveFp C = reduce_curve(CurveQ(2, 3), 1000003);
  for (int i = 0; i < 200; ++i) {
    const Point P = random_point(C, rng);
    const std::uint64_t k = rng() % (1u << 30), m = rng() % (1u << 30);
    REQUIRE(ec_scalar_mul(C, k + m, P) ==
            ec_add(C, ec_scalar_mul(C, k, P), ec_scalar_mul(C, m, P)));
  }
}

TEST_CASE("Lagrange: N_p P = O for every point, all good p <= 500") {
  for (std::uint64_t q : oracle::primes_between(3, 500)) {
    for (auto [a, b] : {std::pair{1, 1}, {-1, 1}}) {
      if (!oracle::good_prime(a, b, q)) continue;
      const CurveFp C = reduce_curve(CurveQ(a, b), q);
      const auto pts = enumerate_points(C);
      for (const Point& P : pts) REQUIRE(ec_scalar_mul(C, pts.size(), P).infinity);
    }
  }
}

TEST_CASE("quadratic twist") {
  const CurveFp C = reduce_curve(CurveQ(1, 1), 101);
  const CurveFp T = quadratic_twist(C);
  CHECK(T.p() == 101);
  // N + N' = 2p + 2
  CHECK(enumerate_points(C).size() + enumerate_points(T).size() == 204);
}
