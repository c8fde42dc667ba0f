#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ecarm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroInverse : public Error {
 public:
  ZeroInverse() : Error("zero has no inverse modulo p") {}
};

class NoRoot : public Error {
 public:
  NoRoot() : Error("value is not a quadratic residue") {}
};

/// Raised when a prime divides the discriminant (or is 2).
class BadReduction : public Error {
 public:
  explicit BadReduction(std::uint64_t p)
      : Error("bad reduction at p = " + std::to_string(p)), prime_(p) {}
  std::uint64_t prime() const noexcept { return prime_; }

 private:
  std::uint64_t prime_;
};

class OracleLimitExceeded : public Error {
 public:
  explicit OracleLimitExceeded(std::uint64_t p)
      : Error("exhaustive oracle refused for p = " + std::to_string(p)) {}
};

class NoAffinePoint : public Error {
 public:
  NoAffinePoint() : Error("curve has no affine point") {}
};

class NotAnnihilated : public Error {
 public:
  NotAnnihilated() : Error("claimed group order does not annihilate the point") {}
};

class ExponentUnresolved : public Error {
 public:
  using Error::Error;
};

class AmbiguityUnresolved : public Error {
 public:
  using Error::Error;
};

class Overflow : public Error {
 public:
  using Error::Error;
};

/// An L-series coefficient was requested for n with a bad prime factor.
class BadPrimeFactor : public Error {
 public:
  explicit BadPrimeFactor(std::uint64_t p)
      : Error("bad prime factor " + std::to_string(p)), prime_(p) {}
  std::uint64_t prime() const noexcept { return prime_; }

 private:
  std::uint64_t prime_;
};

class LimitExceeded : public Error {
 public:
  using Error::Error;
};

class CacheFormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace ecarm
