#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "ecarm/curve.hpp"

namespace ecarm {

/// Per-prime facts about one curve. For bad primes only `p` and `good` are
/// meaningful.
struct PrimeData {
  std::uint64_t p = 0;
  bool good = false;
  std::uint64_t group_order = 0;  // N_p
  std::int64_t trace = 0;         // a_p = p + 1 - N_p
  std::optional<std::uint64_t> exponent;  // t_p, filled lazily

  friend bool operator==(const PrimeData&, const PrimeData&) = default;
};

/// Concurrent p -> PrimeData map with insert-if-absent semantics. Racing
/// writers may both compute a record; the first insert wins and the values
/// are identical anyway.
class PrimeStore {
 public:
  PrimeStore() = default;
  PrimeStore(const PrimeStore&) = delete;
  PrimeStore& operator=(const PrimeStore&) = delete;

  std::optional<PrimeData> find(std::uint64_t p) const;

  /// Returns the stored record, which is `data` unless p was already present.
  PrimeData insert_if_absent(const PrimeData& data);

  /// Sets t_p if p is present and t_p is unset.
  void set_exponent(std::uint64_t p, std::uint64_t exponent);

  std::size_t size() const;

  /// All records sorted by p.
  std::vector<PrimeData> snapshot() const;

  /// Cache file: a "# curve a,b" line, then `p,good,N_p,a_p,t_p` per record
  /// sorted by p; empty fields where unset.
  void save(std::ostream& out, const CurveQ& curve) const;

  /// Merges records from a cache file, rejecting any line that is malformed,
  /// belongs to another curve, or violates the Hasse bound. Throws
  /// CacheFormatError.
  void load(std::istream& in, const CurveQ& curve);

 private:
  static constexpr std::size_t kShards = 64;

  struct Shard {
    mutable std::shared_mutex mutex;
    std::unordered_map<std::uint64_t, PrimeData> records;
  };

  Shard& shard_for(std::uint64_t p) noexcept { return shards_[(p >> 1) % kShards]; }
  const Shard& shard_for(std::uint64_t p) const noexcept { return shards_[(p >> 1) % kShards]; }

  std::array<Shard, kShards> shards_;
};

/// Parses and validates one cache record.
PrimeData parse_cache_record(const std::string& line, const CurveQ& curve);
std::string format_cache_record(const PrimeData& data);

}  // namespace ecarm
