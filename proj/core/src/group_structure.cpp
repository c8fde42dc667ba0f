#include "ecarm/group_structure.hpp"

#include <numeric>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "ecarm/error.hpp"
#include "ecarm/point_counting.hpp"

namespace ecarm {

namespace {

std::uint64_t ipow(std::uint64_t q, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= q;
  return r;
}

unsigned valuation(std::uint64_t n, std::uint64_t q) {
  unsigned v = 0;
  while (n % q == 0) {
    n /= q;
    ++v;
  }
  return v;
}

std::uint64_t point_key(const Point& P) { return (P.x << 1) | (P.y & 1); }

/// c in [0, q) with c g = h, where g has prime order q.
std::optional<std::uint64_t> log_prime_order(const CurveFp& C, const Point& g, std::uint64_t q,
                                              const Point& h) {
  if (h.infinity) return 0;
  constexpr std::uint64_t kLinearBound = 256;
  if (q <= kLinearBound) {
    Point acc = g;
    for (std::uint64_t c = 1; c < q; ++c) {
      if (acc == h) return c;
      acc = ec_add(C, acc, g);
    }
    return std::nullopt;
  }
  std::uint64_t m = isqrt(q);
  if (m * m < q) ++m;
  std::unordered_map<std::uint64_t, std::uint64_t> baby;
  baby.reserve(2 * m);
  Point acc = Point::at_infinity();
  for (std::uint64_t j = 0; j < m; ++j) {
    if (!acc.infinity) baby.try_emplace(point_key(acc), j);
    acc = ec_add(C, acc, g);
  }
  const Point stride = ec_neg(C, ec_scalar_mul(C, m, g));
  Point gamma = h;
  for (std::uint64_t i = 0; i <= m; ++i) {
    if (gamma.infinity) {
      const std::uint64_t c = i * m % q;
      return c;
    }
    if (auto it = baby.find(point_key(gamma)); it != baby.end()) return (i * m + it->second) % q;
    gamma = ec_add(C, gamma, stride);
  }
  return std::nullopt;
}

/// Pohlig-Hellman membership test for R in <G>, G of order q^g, q^g R = O.
bool in_cyclic_subgroup(const CurveFp& C, const Point& G, std::uint64_t q, unsigned g,
                        const Point& R) {
  if (R.infinity) return true;
  if (g == 0) return false;
  const Point base = ec_scalar_mul(C, ipow(q, g - 1), G);
  std::uint64_t x = 0;
  std::uint64_t qi = 1;
  for (unsigned i = 0; i < g; ++i) {
    const Point rest = ec_add(C, R, ec_neg(C, ec_scalar_mul(C, x, G)));
    const Point h = ec_scalar_mul(C, ipow(q, g - 1 - i), rest);
    const auto c = log_prime_order(C, base, q, h);
    if (!c) return false;
    x += *c * qi;
    qi *= q;
  }
  return ec_scalar_mul(C, x, G) == R;
}

/// Exponent e with ord(R) = q^e, for R known to be q-power torsion.
unsigned q_order_exponent(const CurveFp& C, std::uint64_t q, Point R) {
  unsigned e = 0;
  while (!R.infinity) {
    R = ec_scalar_mul(C, q, R);
    ++e;
  }
  return e;
}

/// True once L is proven to be the exponent of a group of order N.
bool exponent_proven(const CurveFp& C, std::uint64_t N, const Factorization& order_factors,
                     std::uint64_t L, const std::vector<Point>& samples) {
  const std::uint64_t r = N / L;
  if (r == 1) return true;
  if (std::gcd(L, C.p() - 1) % r != 0) return false;

  for (const auto& [q, v] : order_factors) {
    if (r % q != 0) continue;
    // q-Sylow subgroup S of order q^v; L says its exponent is q^gamma.
    const unsigned gamma = valuation(L, q);
    const std::uint64_t cofactor = N / ipow(q, v);
    std::vector<Point> projected;
    projected.reserve(samples.size());
    Point generator;
    bool have_generator = false;
    for (const Point& P : samples) {
      projected.push_back(ec_scalar_mul(C, cofactor, P));
      if (!have_generator && q_order_exponent(C, q, projected.back()) == gamma) {
        generator = projected.back();
        have_generator = true;
      }
    }
    if (!have_generator) return false;
    // |<G, R>| = q^(gamma + e) where q^e is the order of R modulo <G>; if it
    // reaches q^v then S is generated by points of order <= q^gamma.
    unsigned best = 0;
    for (const Point& R : projected) {
      const auto e = index_modulo(C, generator, q, gamma, R);
      if (e && *e > best) best = *e;
    }
    if (gamma + best != v) return false;
  }
  return true;
}

}  // namespace

std::uint64_t point_order(const CurveFp& C, const Point& P, const Factorization& multiple) {
  if (!ec_scalar_mul(C, expand(multiple), P).infinity) throw NotAnnihilated();
  std::uint64_t order = expand(multiple);
  for (const auto& [q, e] : multiple) {
    for (unsigned i = 0; i < e; ++i) {
      if (!ec_scalar_mul(C, order / q, P).infinity) break;
      order /= q;
    }
  }
  return order;
}

std::optional<unsigned> index_modulo(const CurveFp& C, const Point& G, std::uint64_t q,
                                     unsigned g, const Point& Q) {
  if (!ec_scalar_mul(C, ipow(q, g), Q).infinity) return std::nullopt;
  Point R = Q;
  for (unsigned e = 0; e <= g; ++e) {
    if (in_cyclic_subgroup(C, G, q, g, R)) return e;
    R = ec_scalar_mul(C, q, R);
  }
  return std::nullopt;
}

std::uint64_t group_exponent(const CurveFp& C, std::uint64_t group_order) {
  if (group_order == 1) return 1;
  const Factorization order_factors = factorize(group_order);

  std::vector<Point> samples;
  std::uint64_t L = 1;
  // Consecutive small x have correlated quadratic characters (x, x - 1 and
  // x + 1 share prime factors), which can keep every sample out of the
  // maximal-order coset. Start points come from a generator with a fixed
  // seed, so the run is still reproducible.
  std::mt19937_64 scatter(C.p());
  for (unsigned s = 0; s < kExponentSampleCap; ++s) {
    const Point P = sample_point(C, s == 0 ? 0 : scatter() % C.p());
    samples.push_back(P);
    L = std::lcm(L, point_order(C, P, order_factors));
    if (exponent_proven(C, group_order, order_factors, L, samples)) return L;
  }

  if (C.p() <= kOracleLimit) {
    L = 1;
    for (const Point& P : enumerate_points(C)) L = std::lcm(L, point_order(C, P, order_factors));
    return L;
  }
  throw ExponentUnresolved("exponent of E(F_p) unresolved for p = " + std::to_string(C.p()) +
                           ", N_p = " + std::to_string(group_order) +
                           ", best lcm = " + std::to_string(L));
}

std::uint64_t exponent_tp(const CurveQ& E, std::uint64_t p, PrimeStore& store) {
  const PrimeData d = prime_data(E, p, store);
  if (!d.good) throw BadReduction(p);
  if (d.exponent) return *d.exponent;
  const std::uint64_t t = group_exponent(reduce_curve(E, p), d.group_order);
  store.set_exponent(p, t);
  return t;
}

}  // namespace ecarm
