#include "ecarm/curve.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <stdexcept>

#include "ecarm/error.hpp"

namespace ecarm {

namespace {

std::int64_t parse_int(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

CurveQ::CurveQ(std::int64_t a, std::int64_t b) : a_(a), b_(b) {
  if (a <= -kCoefficientCap || a >= kCoefficientCap || b <= -kCoefficientCap ||
      b >= kCoefficientCap) {
    throw std::invalid_argument("curve coefficients must satisfy |a|, |b| < 2^31");
  }
  const __int128 A = a;
  const __int128 B = b;
  delta0_ = -16 * (4 * A * A * A + 27 * B * B);
  if (delta0_ == 0) throw std::invalid_argument("singular curve: 4a^3 + 27b^2 = 0");
}

std::pair<std::int64_t, std::int64_t> parse_coefficients(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
    throw std::invalid_argument("curve must be given as 'a,b'");
  }
  return {parse_int(text.substr(0, comma)), parse_int(text.substr(comma + 1))};
}

CurveQ CurveQ::parse(std::string_view text) {
  const auto [a, b] = parse_coefficients(text);
  return CurveQ(a, b);
}

bool CurveQ::good_at(std::uint64_t p) const noexcept {
  if (p == 2) return false;
  return delta0_ % static_cast<__int128>(p) != 0;
}

std::string CurveQ::to_string() const { return std::to_string(a_) + "," + std::to_string(b_); }

std::string int128_to_string(__int128 v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : v;
  std::string s;
  while (u != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (negative) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

Residue CurveFp::rhs(Residue x) const noexcept {
  const Residue x2 = ff::mul(x, x, p_);
  return ff::add(ff::mul(ff::add(x2, a_, p_), x, p_), b_, p_);
}

bool CurveFp::contains(const Point& P) const noexcept {
  if (P.infinity) return true;
  if (P.x >= p() || P.y >= p()) return false;
  return ff::mul(P.y, P.y, p_) == rhs(P.x);
}

CurveFp reduce_curve(const CurveQ& E, std::uint64_t p) {
  if (p == 2) throw BadReduction(p);
  PrimeModulus mod(p);
  if (!E.good_at(p)) throw BadReduction(p);
  return CurveFp(mod, mod.reduce(E.a()), mod.reduce(E.b()));
}

CurveFp quadratic_twist(const CurveFp& C) {
  const auto& p = C.modulus();
  Residue c = 2;
  while (ff::legendre(c, p) != -1) ++c;
  const Residue c2 = ff::mul(c, c, p);
  return CurveFp(p, ff::mul(C.a(), c2, p), ff::mul(C.b(), ff::mul(c2, c, p), p));
}

Point ec_neg(const CurveFp& C, const Point& P) noexcept {
  if (P.infinity) return P;
  return Point::affine(P.x, ff::neg(P.y, C.modulus()));
}

Point ec_double(const CurveFp& C, const Point& P) {
  assert(C.contains(P));
  if (P.infinity || P.y == 0) return Point::at_infinity();
  const auto& p = C.modulus();
  const Residue x2 = ff::mul(P.x, P.x, p);
  const Residue num = ff::add(ff::add(ff::add(x2, x2, p), x2, p), C.a(), p);
  const Residue lambda = ff::mul(num, ff::inv(ff::add(P.y, P.y, p), p), p);
  const Residue x3 = ff::sub(ff::mul(lambda, lambda, p), ff::add(P.x, P.x, p), p);
  const Residue y3 = ff::sub(ff::mul(lambda, ff::sub(P.x, x3, p), p), P.y, p);
  return Point::affine(x3, y3);
}

Point ec_add(const CurveFp& C, const Point& P, const Point& Q) {
  assert(C.contains(P) && C.contains(Q));
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  const auto& p = C.modulus();
  if (P.x == Q.x) {
    if (P.y == Q.y) return ec_double(C, P);
    return Point::at_infinity();
  }
  const Residue lambda = ff::mul(ff::sub(Q.y, P.y, p), ff::inv(ff::sub(Q.x, P.x, p), p), p);
  const Residue x3 = ff::sub(ff::sub(ff::mul(lambda, lambda, p), P.x, p), Q.x, p);
  const Residue y3 = ff::sub(ff::mul(lambda, ff::sub(P.x, x3, p), p), P.y, p);
  return Point::affine(x3, y3);
}

Point ec_scalar_mul(const CurveFp& C, std::uint64_t k, const Point& P) {
  Point result = Point::at_infinity();
  if (k == 0 || P.infinity) return result;
  for (int bit = 63 - __builtin_clzll(k); bit >= 0; --bit) {
    result = ec_double(C, result);
    if ((k >> bit) & 1) result = ec_add(C, result, P);
  }
  return result;
}

Point ec_scalar_mul_signed(const CurveFp& C, std::int64_t k, const Point& P) {
  if (k >= 0) return ec_scalar_mul(C, static_cast<std::uint64_t>(k), P);
  return ec_scalar_mul(C, -static_cast<std::uint64_t>(k), ec_neg(C, P));
}

std::vector<Point> enumerate_points(const CurveFp& C) {
  if (C.p() > kOracleLimit) throw OracleLimitExceeded(C.p());
  const auto& p = C.modulus();
  std::vector<Point> points{Point::at_infinity()};
  for (Residue x = 0; x < C.p(); ++x) {
    const Residue f = C.rhs(x);
    const int chi = ff::legendre(f, p);
    if (chi == 0) {
      points.push_back(Point::affine(x, 0));
    } else if (chi == 1) {
      const auto [r, s] = ff::sqrt_mod(f, p);
      points.push_back(Point::affine(x, r));
      points.push_back(Point::affine(x, s));
    }
  }
  return points;
}

Point sample_point(const CurveFp& C, std::uint64_t index) {
  const auto& p = C.modulus();
  Residue x = index % C.p();
  for (std::uint64_t step = 0; step < C.p(); ++step) {
    const Residue f = C.rhs(x);
    if (ff::legendre(f, p) != -1) return Point::affine(x, ff::sqrt_mod(f, p).first);
    x = x + 1 == C.p() ? 0 : x + 1;
  }
  throw NoAffinePoint();
}

}  // namespace ecarm
