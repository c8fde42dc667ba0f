#include "ecarm/point_counting.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ecarm/error.hpp"
#include "ecarm/factor.hpp"
#include "ecarm/group_structure.hpp"

namespace ecarm {

namespace {

/// Some M in [lo, hi] with M P = O, found by baby-step giant-step. The true
/// group order lies in the interval, so a match always exists.
std::uint64_t find_annihilator(const CurveFp& C, const Point& P, std::uint64_t lo,
                               std::uint64_t hi) {
  const std::uint64_t width = hi - lo + 1;
  std::uint64_t m = isqrt(width);
  if (m * m < width) ++m;

  // x-coordinate of j P -> (j, y), for 1 <= j < m.
  std::unordered_map<Residue, std::pair<std::uint64_t, Residue>> baby;
  baby.reserve(m * 2);
  Point jP = P;
  for (std::uint64_t j = 1; j < m; ++j) {
    if (jP.infinity) return j;
    baby.try_emplace(jP.x, j, jP.y);
    jP = ec_add(C, jP, P);
  }

  const Point giant = ec_scalar_mul(C, m, P);
  Point Q = ec_scalar_mul(C, lo, P);
  for (std::uint64_t base = lo; base <= hi + m; base += m) {
    if (Q.infinity) return base;
    if (auto it = baby.find(Q.x); it != baby.end()) {
      const auto [j, y] = it->second;
      // j P = -Q gives (base + j) P = O; j P = Q gives (base - j) P = O.
      return y == Q.y ? base - j : base + j;
    }
    Q = ec_add(C, Q, giant);
  }
  throw AmbiguityUnresolved("no annihilator in the Hasse interval for p = " +
                            std::to_string(C.p()));
}

}  // namespace

std::uint64_t hasse_radius(std::uint64_t p) { return isqrt(4 * p); }

std::uint64_t count_naive(const CurveFp& C) {
  const std::uint64_t p = C.p();
  if (p > kOracleLimit) throw OracleLimitExceeded(p);

  // chi[v] = Legendre symbol of v, tabulated from the squares.
  std::vector<signed char> chi(p, -1);
  chi[0] = 0;
  for (std::uint64_t y = 1; y <= (p - 1) / 2; ++y) chi[y * y % p] = 1;

  // Walk f(x) = x^3 + a x + b by finite differences:
  // f(x+1) - f(x) = 3x^2 + 3x + 1 + a, whose own step is 6x + 6.
  const auto& mod = C.modulus();
  Residue f = C.b();
  Residue df = ff::add(1 % p, C.a(), mod);
  Residue ddf = 6 % p;
  std::int64_t sum = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    sum += chi[f];
    f = ff::add(f, df, mod);
    df = ff::add(df, ddf, mod);
    ddf = ff::add(ddf, 6 % p, mod);
  }
  return static_cast<std::uint64_t>(static_cast<std::int64_t>(p) + 1 + sum);
}

std::uint64_t count_bsgs(const CurveFp& C) {
  const std::uint64_t p = C.p();
  if (p < kBsgsMinPrime) {
    throw std::invalid_argument("count_bsgs requires p >= 229, got " + std::to_string(p));
  }
  const std::uint64_t r = hasse_radius(p);
  const std::uint64_t lo = p + 1 - r;
  const std::uint64_t hi = p + 1 + r;
  const std::uint64_t twist_sum = 2 * p + 2;  // N + N_twist
  const CurveFp twist = quadratic_twist(C);

  std::uint64_t curve_lcm = 1;
  std::uint64_t twist_lcm = 1;
  std::uint64_t curve_next = 0;
  std::uint64_t twist_next = 0;

  // Curve, curve, twist, twist, then alternate.
  for (unsigned sample = 0; sample < kBsgsSampleCap; ++sample) {
    const bool on_twist = sample == 2 || sample == 3 || (sample >= 4 && sample % 2 == 1);
    const CurveFp& target = on_twist ? twist : C;
    std::uint64_t& next = on_twist ? twist_next : curve_next;
    const Point P = sample_point(target, next);
    next = P.x + 1;

    const std::uint64_t M = find_annihilator(target, P, lo, hi);
    const std::uint64_t order = point_order(target, P, factorize(M));
    std::uint64_t& acc = on_twist ? twist_lcm : curve_lcm;
    acc = std::lcm(acc, order);

    // Candidates N in [lo, hi] with curve_lcm | N and twist_lcm | 2p + 2 - N.
    std::uint64_t found = 0;
    std::uint64_t candidate = 0;
    for (std::uint64_t N = (lo + curve_lcm - 1) / curve_lcm * curve_lcm; N <= hi;
         N += curve_lcm) {
      if ((twist_sum - N) % twist_lcm != 0) continue;
      candidate = N;
      if (++found > 1) break;
    }
    if (found == 1) return candidate;
  }
  throw AmbiguityUnresolved("BSGS could not isolate #E(F_p) for p = " + std::to_string(p));
}

std::uint64_t count_points(const CurveFp& C) {
  if (C.p() < kNaiveThreshold) return count_naive(C);
  try {
    return count_bsgs(C);
  } catch (const AmbiguityUnresolved&) {
    if (C.p() <= kOracleLimit) return count_naive(C);
    throw;
  }
}

PrimeData prime_data(const CurveQ& E, std::uint64_t p, PrimeStore& store) {
  if (auto cached = store.find(p)) return *cached;
  PrimeData d;
  d.p = p;
  d.good = E.good_at(p);
  if (d.good) {
    const CurveFp C = reduce_curve(E, p);
    d.group_order = count_points(C);
    d.trace = static_cast<std::int64_t>(p + 1) - static_cast<std::int64_t>(d.group_order);
  } else if (p != 2 && !is_prime(p)) {
    throw std::invalid_argument("not a prime: " + std::to_string(p));
  }
  return store.insert_if_absent(d);
}

std::int64_t trace_ap(const CurveQ& E, std::uint64_t p, PrimeStore& store) {
  const PrimeData d = prime_data(E, p, store);
  if (!d.good) throw BadReduction(p);
  return d.trace;
}

}  // namespace ecarm
