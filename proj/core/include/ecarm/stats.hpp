#pragma once

// Empirical counting functions and the reference growth curve
// x (log_3 x)^(1/2) (log_4 x)^(1/2) / (log_2 x)^(1/4) for N_E(x).

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ecarm/curve.hpp"
#include "ecarm/l_series.hpp"
#include "ecarm/prime_store.hpp"

namespace ecarm {

/// log_1 x = max(1, log x), log_k x = log_1(log_(k-1) x).
double log_iter(int k, double x);

/// The reference curve with implied constant 1. Defined for all x > 0; for
/// x <= e^e every iterated log clamps to 1 and the value is x itself.
double bound_curve(double x);

/// #{good p <= x : a_p = a}.
std::uint64_t pi_e_a(const CurveQ& E, std::uint64_t x, std::int64_t a, PrimeStore& store);
std::uint64_t pi_e_a(const CurveQ& E, std::uint64_t x, std::int64_t a);

/// #{good p <= x : N_p = a (mod b)}, b >= 1.
std::uint64_t pi_e_ab(const CurveQ& E, std::uint64_t x, std::int64_t a, std::uint64_t b,
                      PrimeStore& store);
std::uint64_t pi_e_ab(const CurveQ& E, std::uint64_t x, std::int64_t a, std::uint64_t b);

/// #{n <= x : every prime factor of n is good, a_n = a (mod m)}; n = 1 counts.
std::uint64_t an_congruence_count(const LCoefficientContext& ctx, std::uint64_t x,
                                  std::int64_t a, std::uint64_t m);

/// Number of good primes <= x.
std::uint64_t good_prime_count(const CurveQ& E, std::uint64_t x);

struct CountingRow {
  std::uint64_t x = 0;
  std::uint64_t count = 0;  // N_E(x)
  double bound = 0;
  double ratio = 0;  // count / x

  friend bool operator==(const CountingRow&, const CountingRow&) = default;
};

using CountingTable = std::vector<CountingRow>;

/// One row per checkpoint with the number of found values <= x. Both inputs
/// must be ascending; checkpoints strictly so.
CountingTable counting_table(std::span<const std::uint64_t> found,
                             std::span<const std::uint64_t> checkpoints);

/// 10, 100, ... up to limit.
std::vector<std::uint64_t> log10_checkpoints(std::uint64_t limit);

/// "x,N_E,bound,ratio" header, then rows with bound and ratio to 6
/// significant digits in scientific notation.
std::string to_csv(const CountingTable& table);

}  // namespace ecarm
