#include "ecarm/carmichael.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <span>
#include <thread>

#include "ecarm/error.hpp"
#include "ecarm/group_structure.hpp"
#include "ecarm/point_counting.hpp"
#include "ecarm/sieve.hpp"

namespace ecarm {

namespace {

/// v mod m in [0, m).
std::uint64_t floor_mod(std::int64_t v, std::uint64_t m) {
  const auto r = static_cast<std::int64_t>(static_cast<__int128>(v) % static_cast<__int128>(m));
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
}

std::string factorization_text(const Factorization& f) {
  if (f.empty()) return "1";
  std::string s;
  for (const auto& [q, e] : f) {
    if (!s.empty()) s += '*';
    s += std::to_string(q) + '^' + std::to_string(e);
  }
  return s;
}

template <typename T>
std::string optional_text(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string("-");
}

/// Search's hot path: same decision as check_candidate without building a
/// certificate, with cached exponents short-circuiting the point pre-check.
bool passes(const LCoefficientContext& ctx, std::uint64_t n, std::span<const PrimePower> factors) {
  if (factors.size() < 2) return false;
  for (const auto& [p, e] : factors) {
    if (!ctx.curve().good_at(p)) return false;
  }
  __int128 a_n = 1;
  for (const auto& [p, e] : factors) a_n *= a_prime_power(ctx.trace(p), p, e);
  const auto test_value = static_cast<std::int64_t>(static_cast<__int128>(n) + 1 - a_n);

  for (const auto& [p, e] : factors) {
    const PrimeData d = ctx.prime(p);
    if (!d.exponent) {
      // Lagrange: reducing modulo N_p does not change k P.
      const CurveFp C = reduce_curve(ctx.curve(), p);
      const std::uint64_t k = floor_mod(test_value, d.group_order);
      if (!ec_scalar_mul(C, k, sample_point(C, 0)).infinity) return false;
    }
    const std::uint64_t t = d.exponent ? *d.exponent : ctx.exponent(p);
    if (floor_mod(test_value, t) != 0) return false;
  }
  return true;
}

}  // namespace

std::string Certificate::reason_text() const {
  switch (reason) {
    case RejectReason::none:
      return "none";
    case RejectReason::not_composite:
      return "NotComposite";
    case RejectReason::prime_power:
      return "PrimePower";
    case RejectReason::bad_prime_factor:
      return "BadPrimeFactor(" + std::to_string(reason_prime) + ")";
    case RejectReason::divisibility_fails:
      return "DivisibilityFails(" + std::to_string(reason_prime) + ")";
  }
  return "none";
}

std::string Certificate::to_text() const {
  std::string s;
  s += "n: " + std::to_string(n) + '\n';
  s += std::string("verdict: ") + (accepted() ? "accepted" : "rejected") + '\n';
  s += "reason: " + reason_text() + '\n';
  s += "factorization: " + factorization_text(factorization) + '\n';
  s += "a_n: " + optional_text(a_n) + '\n';
  s += "test_value: " + optional_text(test_value) + '\n';
  for (const PrimeCheck& row : per_prime) {
    s += "prime: " + std::to_string(row.p) + ':' + std::to_string(row.a_p) + ':' +
         std::to_string(row.group_order) + ':' + optional_text(row.exponent) + ':' +
         (row.divides ? (*row.divides ? "true" : "false") : "-") + '\n';
  }
  return s;
}

std::optional<PrimePower> is_prime_power(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("is_prime_power expects n >= 2");
  const Factorization f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

Certificate check_candidate(const LCoefficientContext& ctx, std::uint64_t n) {
  Certificate cert;
  cert.n = n;
  if (n < 2) {
    cert.reason = RejectReason::not_composite;
    return cert;
  }
  cert.factorization = factorize(n);
  if (cert.factorization.size() == 1) {
    cert.reason = RejectReason::prime_power;
    return cert;
  }
  for (const auto& [p, e] : cert.factorization) {
    if (!ctx.curve().good_at(p)) {
      cert.reason = RejectReason::bad_prime_factor;
      cert.reason_prime = p;
      return cert;
    }
  }

  for (const auto& [p, e] : cert.factorization) {
    const PrimeData d = ctx.prime(p);
    cert.per_prime.push_back({p, d.trace, d.group_order, std::nullopt, std::nullopt});
  }
  const std::int64_t a_n = l_coefficient(ctx, cert.factorization);
  const std::int64_t test_value =
      static_cast<std::int64_t>(static_cast<__int128>(n) + 1 - a_n);
  cert.a_n = a_n;
  cert.test_value = test_value;

  for (PrimeCheck& row : cert.per_prime) {
    const CurveFp C = reduce_curve(ctx.curve(), row.p);
    const bool precheck = ec_scalar_mul_signed(C, test_value, sample_point(C, 0)).infinity;
    row.exponent = ctx.exponent(row.p);
    row.divides = precheck && floor_mod(test_value, *row.exponent) == 0;
    if (!*row.divides) {
      cert.reason = RejectReason::divisibility_fails;
      cert.reason_prime = row.p;
      return cert;
    }
  }
  cert.verdict = Verdict::accepted;
  return cert;
}

const std::vector<Point>& DefinitionOracle::points(std::uint64_t p) {
  auto it = points_.find(p);
  if (it == points_.end()) {
    it = points_.emplace(p, enumerate_points(reduce_curve(curve_, p))).first;
  }
  return it->second;
}

bool DefinitionOracle::check(std::uint64_t n) {
  if (n < 2) return false;

  // Plain trial division, kept apart from the library's factorizer.
  std::vector<std::pair<std::uint64_t, unsigned>> factors;
  std::uint64_t m = n;
  for (std::uint64_t q = 2; q * q <= m; ++q) {
    if (m % q != 0) continue;
    unsigned e = 0;
    while (m % q == 0) {
      m /= q;
      ++e;
    }
    factors.emplace_back(q, e);
  }
  if (m > 1) factors.emplace_back(m, 1);
  if (factors.size() < 2) return false;

  for (const auto& [p, e] : factors) {
    if (p == 2 || curve_.delta0() % static_cast<__int128>(p) == 0) return false;
  }
  for (const auto& [p, e] : factors) {
    if (p > kOracleLimit) throw OracleLimitExceeded(p);
  }

  // a_n from the Euler factors: the coefficients c_k of 1 / (1 - a_p X + p X^2).
  __int128 a_n = 1;
  for (const auto& [p, e] : factors) {
    const auto a_p = static_cast<__int128>(p) + 1 - static_cast<__int128>(points(p).size());
    __int128 c_prev = 0;
    __int128 c = 1;
    for (unsigned k = 1; k <= e; ++k) {
      const __int128 next = a_p * c - static_cast<__int128>(p) * c_prev;
      c_prev = c;
      c = next;
    }
    a_n *= c;
  }
  const auto test_value = static_cast<std::int64_t>(static_cast<__int128>(n) + 1 - a_n);

  for (const auto& [p, e] : factors) {
    const CurveFp C = reduce_curve(curve_, p);
    for (const Point& P : points(p)) {
      if (!ec_scalar_mul_signed(C, test_value, P).infinity) return false;
    }
  }
  return true;
}

bool oracle_check(const CurveQ& E, std::uint64_t n) { return DefinitionOracle(E).check(n); }

std::vector<std::uint64_t> search(const LCoefficientContext& ctx, std::uint64_t limit,
                                  const SearchOptions& options) {
  if (limit > options.max_limit) {
    throw LimitExceeded("search limit " + std::to_string(limit) + " exceeds the cap " +
                        std::to_string(options.max_limit));
  }
  if (limit < 2) return {};

  const SegmentedFactorSieve sieve(limit);
  const std::uint64_t seg = std::max<std::uint64_t>(options.segment_size, 1);
  const std::uint64_t segments = (limit + seg - 1) / seg;  // windows over [1, limit]
  std::vector<std::vector<std::uint64_t>> found(segments);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    try {
      for (std::uint64_t s = next++; s < segments; s = next++) {
        const std::uint64_t lo = 1 + s * seg;
        const std::uint64_t hi = std::min(lo + seg, limit + 1);
        sieve.for_each(lo, hi, [&](std::uint64_t n, std::span<const PrimePower> factors) {
          if (n % 2 == 0) return;  // 2 is always bad
          if (passes(ctx, n, factors)) found[s].push_back(n);
        });
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = segments;
    }
  };

  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<std::uint64_t> result;
  for (const auto& part : found) result.insert(result.end(), part.begin(), part.end());
  return result;
}

}  // namespace ecarm
