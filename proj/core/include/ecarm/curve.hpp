#pragma once

// Short Weierstrass curves y^2 = x^3 + a x + b over Q, their reductions
// modulo primes, and the chord-tangent group law in affine coordinates.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ecarm/finite_field.hpp"

namespace ecarm {

/// A nonsingular curve over Q with integer coefficients |a|, |b| < 2^31.
class CurveQ {
 public:
  static constexpr std::int64_t kCoefficientCap = std::int64_t{1} << 31;

  /// Throws std::invalid_argument if singular or outside the coefficient cap.
  CurveQ(std::int64_t a, std::int64_t b);

  /// Parses "a,b"; see parse_coefficients.
  static CurveQ parse(std::string_view text);

  std::int64_t a() const noexcept { return a_; }
  std::int64_t b() const noexcept { return b_; }

  /// -16 (4 a^3 + 27 b^2).
  __int128 delta0() const noexcept { return delta0_; }

  /// p is good when p != 2 and p does not divide delta0.
  bool good_at(std::uint64_t p) const noexcept;

  std::string to_string() const;

  friend bool operator==(const CurveQ&, const CurveQ&) = default;

 private:
  std::int64_t a_;
  std::int64_t b_;
  __int128 delta0_;
};

/// Splits "a,b" into two decimal integers. Throws std::invalid_argument if
/// malformed; does not check the curve itself.
std::pair<std::int64_t, std::int64_t> parse_coefficients(std::string_view text);

std::string int128_to_string(__int128 v);

/// Affine point or the point at infinity.
struct Point {
  bool infinity = true;
  Residue x = 0;
  Residue y = 0;

  static constexpr Point at_infinity() noexcept { return {}; }
  static constexpr Point affine(Residue x, Residue y) noexcept { return {false, x, y}; }

  friend bool operator==(const Point&, const Point&) = default;
};

class CurveFp {
 public:
  CurveFp(PrimeModulus p, Residue a, Residue b) noexcept : p_(p), a_(a), b_(b) {}

  const PrimeModulus& modulus() const noexcept { return p_; }
  std::uint64_t p() const noexcept { return p_.value(); }
  Residue a() const noexcept { return a_; }
  Residue b() const noexcept { return b_; }

  /// x^3 + a x + b.
  Residue rhs(Residue x) const noexcept;
  bool contains(const Point& P) const noexcept;

  friend bool operator==(const CurveFp&, const CurveFp&) = default;

 private:
  PrimeModulus p_;
  Residue a_;
  Residue b_;
};

/// Throws BadReduction for p == 2 or p | delta0, std::invalid_argument if p
/// is not a prime below 2^40.
CurveFp reduce_curve(const CurveQ& E, std::uint64_t p);

/// The twist by the smallest quadratic non-residue c: (a c^2, b c^3).
CurveFp quadratic_twist(const CurveFp& C);

Point ec_neg(const CurveFp& C, const Point& P) noexcept;
Point ec_add(const CurveFp& C, const Point& P, const Point& Q);
Point ec_double(const CurveFp& C, const Point& P);
Point ec_scalar_mul(const CurveFp& C, std::uint64_t k, const Point& P);
/// k P for signed k, as |k| (-P) when k < 0.
Point ec_scalar_mul_signed(const CurveFp& C, std::int64_t k, const Point& P);

inline constexpr std::uint64_t kOracleLimit = std::uint64_t{1} << 20;

/// Every point, infinity first, then affine points by (x, y). Throws
/// OracleLimitExceeded for p > 2^20.
std::vector<Point> enumerate_points(const CurveFp& C);

/// First point found scanning x = index, index + 1, ... (mod p), taking the
/// smaller root. Throws NoAffinePoint if the curve has none.
Point sample_point(const CurveFp& C, std::uint64_t index);

}  // namespace ecarm
