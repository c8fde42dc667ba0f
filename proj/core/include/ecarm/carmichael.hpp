#pragma once

// E-Carmichael numbers: n that is not a prime power, has only good prime
// factors, and satisfies (n + 1 - a_n) P = O for every P in E(F_p), p | n.
// Equivalently t_p | n + 1 - a_n for every p | n.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ecarm/curve.hpp"
#include "ecarm/factor.hpp"
#include "ecarm/l_series.hpp"

namespace ecarm {

enum class Verdict { accepted, rejected };

enum class RejectReason { none, not_composite, prime_power, bad_prime_factor, divisibility_fails };

struct PrimeCheck {
  std::uint64_t p = 0;
  std::int64_t a_p = 0;
  std::uint64_t group_order = 0;
  std::optional<std::uint64_t> exponent;
  std::optional<bool> divides;

  friend bool operator==(const PrimeCheck&, const PrimeCheck&) = default;
};

/// Audit trail for one n. Fields after the first failing test stay unset.
struct Certificate {
  std::uint64_t n = 0;
  Factorization factorization;
  Verdict verdict = Verdict::rejected;
  RejectReason reason = RejectReason::none;
  std::uint64_t reason_prime = 0;  // for bad_prime_factor and divisibility_fails
  std::optional<std::int64_t> a_n;
  std::optional<std::int64_t> test_value;
  std::vector<PrimeCheck> per_prime;

  bool accepted() const noexcept { return verdict == Verdict::accepted; }

  /// "NotComposite", "PrimePower", "BadPrimeFactor(p)", "DivisibilityFails(p)" or "none".
  std::string reason_text() const;

  /// Key-value document, one "key: value" per line in the order n, verdict,
  /// reason, factorization, a_n, test_value, then one "prime: p:a_p:N_p:t_p:divides"
  /// row per prime factor. Unset values are written as "-".
  std::string to_text() const;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// (p, k) with n = p^k, k >= 1, or empty. Requires n >= 2.
std::optional<PrimePower> is_prime_power(std::uint64_t n);

/// Runs the tests in order: prime-power exclusion, good reduction, a_n and
/// n + 1 - a_n, then per prime a one-point pre-check followed by t_p | n + 1 - a_n.
Certificate check_candidate(const LCoefficientContext& ctx, std::uint64_t n);

/// The definition evaluated literally: every point of every E(F_p), p | n,
/// found by enumeration and multiplied by n + 1 - a_n. Enumerations are
/// cached per prime. Throws OracleLimitExceeded if some p | n exceeds 2^20.
class DefinitionOracle {
 public:
  explicit DefinitionOracle(CurveQ curve) : curve_(curve) {}
  bool check(std::uint64_t n);

 private:
  const std::vector<Point>& points(std::uint64_t p);

  CurveQ curve_;
  std::map<std::uint64_t, std::vector<Point>> points_;
};

bool oracle_check(const CurveQ& E, std::uint64_t n);

struct SearchOptions {
  unsigned threads = 1;
  std::uint64_t max_limit = 1'000'000'000;
  std::uint64_t segment_size = std::uint64_t{1} << 15;
};

/// All E-Carmichael n <= limit, ascending. Throws LimitExceeded above
/// options.max_limit. The result does not depend on threads or on what the
/// store already holds.
std::vector<std::uint64_t> search(const LCoefficientContext& ctx, std::uint64_t limit,
                                  const SearchOptions& options = {});

}  // namespace ecarm
