#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ecarm::cli {

enum class OutputFormat { plain, csv, certificate_text };

/// Everything one invocation needs, after argument parsing.
struct RunConfig {
  std::int64_t curve_a = 0;
  std::int64_t curve_b = 0;
  std::string command;
  std::optional<std::uint64_t> prime;
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> limit;
  std::optional<std::int64_t> residue;  // --a
  std::optional<std::uint64_t> modulus;  // --b or --p
  std::string checkpoints = "log10";
  unsigned threads = 1;
  std::optional<std::string> cache_path;
  OutputFormat output = OutputFormat::plain;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRejectedInput = 2;  // singular curve, bad prime, cap exceeded
inline constexpr int kExitVerifyRejected = 3;

/// Largest --limit any command accepts.
inline constexpr std::uint64_t kLimitCap = 1'000'000'000;

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ecarm::cli
