#pragma once

// Point orders and the exponent t_p of E(F_p) ~ Z/d x Z/t_p, d | t_p, d | p-1.

#include <cstdint>
#include <optional>

#include "ecarm/curve.hpp"
#include "ecarm/factor.hpp"
#include "ecarm/prime_store.hpp"

namespace ecarm {

inline constexpr unsigned kExponentSampleCap = 32;

/// Exact order of P given the factorization of a multiple of it (normally
/// N_p). Throws NotAnnihilated if that multiple does not kill P.
std::uint64_t point_order(const CurveFp& C, const Point& P, const Factorization& multiple);

/// Smallest e >= 0 with q^e Q in <G>, where G has order q^g and Q is killed
/// by q^g; empty if Q is not a q-power torsion point of that size.
std::optional<unsigned> index_modulo(const CurveFp& C, const Point& G, std::uint64_t q,
                                     unsigned g, const Point& Q);

/// t_p from the true group order. Samples points deterministically and
/// accepts lcm L of their orders only once every Sylow subgroup where L
/// falls short of N_p is proven to be covered by two sampled points.
/// Throws ExponentUnresolved if p > 2^20 and 32 samples do not suffice.
std::uint64_t group_exponent(const CurveFp& C, std::uint64_t group_order);

/// t_p for a good prime, memoized in the store. Throws BadReduction.
std::uint64_t exponent_tp(const CurveQ& E, std::uint64_t p, PrimeStore& store);

}  // namespace ecarm
