#include "ecarm/prime_store.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <mutex>
#include <ostream>
#include <string>
#include <string_view>

#include "ecarm/error.hpp"

namespace ecarm {

namespace {

template <typename Int>
Int parse_field(std::string_view field, const std::string& line) {
  Int v{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
    throw CacheFormatError("malformed cache record: '" + line + "'");
  }
  return v;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::string curve_header(const CurveQ& curve) { return "# curve " + curve.to_string(); }

}  // namespace

std::optional<PrimeData> PrimeStore::find(std::uint64_t p) const {
  const Shard& s = shard_for(p);
  std::shared_lock lock(s.mutex);
  auto it = s.records.find(p);
  if (it == s.records.end()) return std::nullopt;
  return it->second;
}

PrimeData PrimeStore::insert_if_absent(const PrimeData& data) {
  Shard& s = shard_for(data.p);
  std::unique_lock lock(s.mutex);
  auto [it, inserted] = s.records.try_emplace(data.p, data);
  if (!inserted && !it->second.exponent && data.exponent) it->second.exponent = data.exponent;
  return it->second;
}

void PrimeStore::set_exponent(std::uint64_t p, std::uint64_t exponent) {
  Shard& s = shard_for(p);
  std::unique_lock lock(s.mutex);
  auto it = s.records.find(p);
  if (it != s.records.end() && !it->second.exponent) it->second.exponent = exponent;
}

std::size_t PrimeStore::size() const {
  std::size_t n = 0;
  for (const Shard& s : shards_) {
    std::shared_lock lock(s.mutex);
    n += s.records.size();
  }
  return n;
}

std::vector<PrimeData> PrimeStore::snapshot() const {
  std::vector<PrimeData> all;
  for (const Shard& s : shards_) {
    std::shared_lock lock(s.mutex);
    for (const auto& [p, data] : s.records) all.push_back(data);
  }
  std::sort(all.begin(), all.end(), [](const auto& l, const auto& r) { return l.p < r.p; });
  return all;
}

std::string format_cache_record(const PrimeData& d) {
  std::string line = std::to_string(d.p) + (d.good ? ",1," : ",0,");
  if (d.good) {
    line += std::to_string(d.group_order) + "," + std::to_string(d.trace) + ",";
    if (d.exponent) line += std::to_string(*d.exponent);
  } else {
    line += ",,";
  }
  return line;
}

PrimeData parse_cache_record(const std::string& line, const CurveQ& curve) {
  const auto fields = split_fields(line);
  if (fields.size() != 5) throw CacheFormatError("cache record needs 5 fields: '" + line + "'");

  PrimeData d;
  d.p = parse_field<std::uint64_t>(fields[0], line);
  if (!is_prime(d.p)) throw CacheFormatError("cache record for non-prime: '" + line + "'");
  if (fields[1] != "0" && fields[1] != "1") {
    throw CacheFormatError("good flag must be 0 or 1: '" + line + "'");
  }
  d.good = fields[1] == "1";
  if (d.good != curve.good_at(d.p)) {
    throw CacheFormatError("reduction type disagrees with the curve: '" + line + "'");
  }
  if (!d.good) {
    if (!fields[2].empty() || !fields[3].empty() || !fields[4].empty()) {
      throw CacheFormatError("bad prime record carries data: '" + line + "'");
    }
    return d;
  }

  d.group_order = parse_field<std::uint64_t>(fields[2], line);
  d.trace = parse_field<std::int64_t>(fields[3], line);
  const auto p = static_cast<__int128>(d.p);
  if (static_cast<__int128>(d.group_order) != p + 1 - d.trace) {
    throw CacheFormatError("N_p != p + 1 - a_p: '" + line + "'");
  }
  if (static_cast<__int128>(d.trace) * d.trace > 4 * p) {
    throw CacheFormatError("Hasse bound violated: '" + line + "'");
  }
  if (!fields[4].empty()) {
    const auto t = parse_field<std::uint64_t>(fields[4], line);
    if (t == 0 || d.group_order % t != 0 ||
        static_cast<unsigned __int128>(t) * t < d.group_order) {
      throw CacheFormatError("inconsistent exponent: '" + line + "'");
    }
    d.exponent = t;
  }
  return d;
}

void PrimeStore::save(std::ostream& out, const CurveQ& curve) const {
  out << curve_header(curve) << '\n';
  for (const PrimeData& d : snapshot()) out << format_cache_record(d) << '\n';
}

void PrimeStore::load(std::istream& in, const CurveQ& curve) {
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (first && line.rfind("# curve ", 0) == 0 && line != curve_header(curve)) {
        throw CacheFormatError("cache file belongs to another curve: '" + line + "'");
      }
      first = false;
      continue;
    }
    first = false;
    insert_if_absent(parse_cache_record(line, curve));
  }
}

}  // namespace ecarm
