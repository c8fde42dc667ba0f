#include "ecarm/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "ecarm/factor.hpp"
#include "ecarm/point_counting.hpp"
#include "ecarm/sieve.hpp"

namespace ecarm {

double log_iter(int k, double x) {
  if (k < 1) throw std::invalid_argument("log_iter needs k >= 1");
  if (!(x > 0)) throw std::invalid_argument("log_iter needs x > 0");
  for (int i = 0; i < k; ++i) x = std::max(1.0, std::log(x));
  return x;
}

double bound_curve(double x) {
  return x * std::sqrt(log_iter(3, x)) * std::sqrt(log_iter(4, x)) /
         std::pow(log_iter(2, x), 0.25);
}

std::uint64_t good_prime_count(const CurveQ& E, std::uint64_t x) {
  const auto primes = primes_up_to(x);
  return static_cast<std::uint64_t>(
      std::count_if(primes.begin(), primes.end(), [&](std::uint64_t p) { return E.good_at(p); }));
}

std::uint64_t pi_e_a(const CurveQ& E, std::uint64_t x, std::int64_t a, PrimeStore& store) {
  std::uint64_t count = 0;
  for (std::uint64_t p : primes_up_to(x)) {
    if (!E.good_at(p)) continue;
    // Outside the Hasse window no prime can match.
    if (static_cast<__int128>(a) * a > 4 * static_cast<__int128>(p)) continue;
    if (trace_ap(E, p, store) == a) ++count;
  }
  return count;
}

std::uint64_t pi_e_a(const CurveQ& E, std::uint64_t x, std::int64_t a) {
  PrimeStore store;
  return pi_e_a(E, x, a, store);
}

std::uint64_t pi_e_ab(const CurveQ& E, std::uint64_t x, std::int64_t a, std::uint64_t b,
                      PrimeStore& store) {
  if (b == 0) throw std::invalid_argument("pi_e_ab needs b >= 1");
  const auto mod = static_cast<std::int64_t>(b);
  const std::int64_t target = ((a % mod) + mod) % mod;
  std::uint64_t count = 0;
  for (std::uint64_t p : primes_up_to(x)) {
    if (!E.good_at(p)) continue;
    const PrimeData d = prime_data(E, p, store);
    if (static_cast<std::int64_t>(d.group_order % b) == target) ++count;
  }
  return count;
}

std::uint64_t pi_e_ab(const CurveQ& E, std::uint64_t x, std::int64_t a, std::uint64_t b) {
  PrimeStore store;
  return pi_e_ab(E, x, a, b, store);
}

std::uint64_t an_congruence_count(const LCoefficientContext& ctx, std::uint64_t x,
                                  std::int64_t a, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("an_congruence_count needs a positive modulus");
  if (x == 0) return 0;
  const auto mod = static_cast<__int128>(m);
  const __int128 target = ((a % mod) + mod) % mod;
  std::uint64_t count = 0;
  const SegmentedFactorSieve sieve(x);
  constexpr std::uint64_t kWindow = std::uint64_t{1} << 15;
  for (std::uint64_t lo = 1; lo <= x; lo += kWindow) {
    const std::uint64_t hi = std::min(lo + kWindow, x + 1);
    sieve.for_each(lo, hi, [&](std::uint64_t, std::span<const PrimePower> factors) {
      for (const auto& [p, e] : factors) {
        if (!ctx.curve().good_at(p)) return;
      }
      const std::int64_t a_n =
          l_coefficient(ctx, Factorization(factors.begin(), factors.end()));
      if (((a_n % mod) + mod) % mod == target) ++count;
    });
  }
  return count;
}

CountingTable counting_table(std::span<const std::uint64_t> found,
                             std::span<const std::uint64_t> checkpoints) {
  if (!std::is_sorted(found.begin(), found.end())) {
    throw std::invalid_argument("found values must be ascending");
  }
  if (std::adjacent_find(checkpoints.begin(), checkpoints.end(),
                         [](auto l, auto r) { return l >= r; }) != checkpoints.end()) {
    throw std::invalid_argument("checkpoints must be strictly increasing");
  }
  CountingTable table;
  for (std::uint64_t x : checkpoints) {
    if (x == 0) throw std::invalid_argument("checkpoints must be positive");
    const auto count =
        static_cast<std::uint64_t>(std::upper_bound(found.begin(), found.end(), x) - found.begin());
    const auto xd = static_cast<double>(x);
    table.push_back({x, count, bound_curve(xd), static_cast<double>(count) / xd});
  }
  return table;
}

std::vector<std::uint64_t> log10_checkpoints(std::uint64_t limit) {
  std::vector<std::uint64_t> xs;
  for (std::uint64_t x = 10; x <= limit; x *= 10) {
    xs.push_back(x);
    if (x > UINT64_MAX / 10) break;
  }
  return xs;
}

std::string to_csv(const CountingTable& table) {
  std::string out = "x,N_E,bound,ratio\n";
  char buf[128];
  for (const CountingRow& row : table) {
    std::snprintf(buf, sizeof buf, "%llu,%llu,%.5e,%.5e\n",
                  static_cast<unsigned long long>(row.x),
                  static_cast<unsigned long long>(row.count), row.bound, row.ratio);
    out += buf;
  }
  return out;
}

}  // namespace ecarm
