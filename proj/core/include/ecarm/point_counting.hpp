#pragma once

// #E(F_p) and the trace of Frobenius a_p = p + 1 - #E(F_p).

#include <cstdint>

#include "ecarm/curve.hpp"
#include "ecarm/prime_store.hpp"

namespace ecarm {

/// Below this, trace_ap counts by character sum; at or above it, by BSGS.
inline constexpr std::uint64_t kNaiveThreshold = std::uint64_t{1} << 16;
/// Smallest p for which count_bsgs is admitted.
inline constexpr std::uint64_t kBsgsMinPrime = 229;
/// Points sampled (curve and twist combined) before BSGS gives up.
inline constexpr unsigned kBsgsSampleCap = 32;

/// floor(2 sqrt(p)): |a_p| never exceeds this.
std::uint64_t hasse_radius(std::uint64_t p);

/// p + 1 + sum_x (x^3 + a x + b / p). Throws OracleLimitExceeded for p > 2^20.
std::uint64_t count_naive(const CurveFp& C);

/// Baby-step giant-step order finding over the Hasse interval, combining
/// constraints from the curve and its quadratic twist until one candidate
/// remains. Requires p >= 229. Throws AmbiguityUnresolved if 32 samples do
/// not pin the order down.
std::uint64_t count_bsgs(const CurveFp& C);

/// Dispatches on kNaiveThreshold.
std::uint64_t count_points(const CurveFp& C);

/// Memoized PrimeData for p (good or bad). p must be prime.
PrimeData prime_data(const CurveQ& E, std::uint64_t p, PrimeStore& store);

/// a_p, memoized. Throws BadReduction.
std::int64_t trace_ap(const CurveQ& E, std::uint64_t p, PrimeStore& store);

}  // namespace ecarm
