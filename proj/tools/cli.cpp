#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <tuple>

#include "ecarm/carmichael.hpp"
#include "ecarm/error.hpp"
#include "ecarm/group_structure.hpp"
#include "ecarm/l_series.hpp"
#include "ecarm/point_counting.hpp"
#include "ecarm/stats.hpp"

namespace ecarm::cli {

namespace {

/// Distinguishes malformed input (exit 1) from rejected input (exit 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RejectedInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::uint64_t> parse_checkpoints(const std::string& text, std::uint64_t limit) {
  if (text == "log10") return log10_checkpoints(limit);
  std::vector<std::uint64_t> xs;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    std::uint64_t x = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), x);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || x == 0) {
      throw UsageError("bad checkpoint '" + std::string(item) + "'");
    }
    xs.push_back(x);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (std::adjacent_find(xs.begin(), xs.end(), [](auto l, auto r) { return l >= r; }) !=
      xs.end()) {
    throw UsageError("checkpoints must be strictly increasing");
  }
  if (!xs.empty() && xs.back() > limit) throw UsageError("checkpoints must not exceed --limit");
  return xs;
}

void require_limit(const RunConfig& cfg) {
  if (*cfg.limit > kLimitCap) {
    throw RejectedInput("--limit " + std::to_string(*cfg.limit) + " exceeds the cap " +
                        std::to_string(kLimitCap));
  }
}

std::uint64_t require_prime(const RunConfig& cfg) {
  const std::uint64_t p = *cfg.prime;
  if (!is_prime(p)) throw UsageError("--prime " + std::to_string(p) + " is not prime");
  if (p >= PrimeModulus::kMax) throw RejectedInput("--prime must be below 2^40");
  return p;
}

class Session {
 public:
  Session(const RunConfig& cfg, CurveQ curve)
      : cfg_(cfg), ctx_(curve) {
    if (cfg_.cache_path && std::filesystem::exists(*cfg_.cache_path)) {
      std::ifstream in(*cfg_.cache_path);
      if (!in) throw RejectedInput("cannot read cache " + *cfg_.cache_path);
      ctx_.store().load(in, curve);
    }
  }

  const LCoefficientContext& ctx() const { return ctx_; }

  void save() const {
    if (!cfg_.cache_path) return;
    const std::string tmp = *cfg_.cache_path + ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) throw RejectedInput("cannot write cache " + *cfg_.cache_path);
      ctx_.store().save(out, ctx_.curve());
    }
    std::filesystem::rename(tmp, *cfg_.cache_path);
  }

 private:
  const RunConfig& cfg_;
  LCoefficientContext ctx_;
};

int execute(const RunConfig& cfg, std::ostream& out) {
  CurveQ curve = [&] {
    try {
      return CurveQ(cfg.curve_a, cfg.curve_b);
    } catch (const std::invalid_argument& e) {
      throw RejectedInput(e.what());
    }
  }();
  Session session(cfg, curve);
  const auto& ctx = session.ctx();
  int status = kExitOk;

  if (cfg.command == "ap") {
    out << ctx.trace(require_prime(cfg)) << '\n';
  } else if (cfg.command == "exponent") {
    const std::uint64_t p = require_prime(cfg);
    const PrimeData d = ctx.prime(p);
    if (!d.good) throw BadReduction(p);
    const std::uint64_t t = ctx.exponent(p);
    out << "N_p: " << d.group_order << '\n' << "t_p: " << t << '\n';
  } else if (cfg.command == "an") {
    if (*cfg.n == 0) throw UsageError("--n must be >= 1");
    out << l_coefficient(ctx, *cfg.n) << '\n';
  } else if (cfg.command == "search") {
    require_limit(cfg);
    for (std::uint64_t n : search(ctx, *cfg.limit, {.threads = cfg.threads})) out << n << '\n';
  } else if (cfg.command == "verify") {
    const Certificate cert = check_candidate(ctx, *cfg.n);
    out << cert.to_text();
    status = cert.accepted() ? kExitOk : kExitVerifyRejected;
  } else if (cfg.command == "stats") {
    require_limit(cfg);
    const auto checkpoints = parse_checkpoints(cfg.checkpoints, *cfg.limit);
    const auto found = search(ctx, *cfg.limit, {.threads = cfg.threads});
    out << to_csv(counting_table(found, checkpoints));
  } else if (cfg.command == "pi-ea") {
    require_limit(cfg);
    out << pi_e_a(curve, *cfg.limit, *cfg.residue, ctx.store()) << '\n';
  } else if (cfg.command == "pi-eab") {
    require_limit(cfg);
    if (*cfg.modulus == 0) throw UsageError("--b must be >= 1");
    out << pi_e_ab(curve, *cfg.limit, *cfg.residue, *cfg.modulus, ctx.store()) << '\n';
  } else if (cfg.command == "an-cong") {
    require_limit(cfg);
    if (!is_prime(*cfg.modulus)) throw UsageError("--p must be prime");
    out << an_congruence_count(ctx, *cfg.limit, *cfg.residue, *cfg.modulus) << '\n';
  } else {
    throw UsageError("unknown command '" + cfg.command + "'");
  }
  session.save();
  return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elliptic Carmichael numbers: traces, group exponents, L-series coefficients "
               "and counting statistics for y^2 = x^3 + a x + b"};
  app.name("ecarm");
  app.require_subcommand(1);

  RunConfig cfg;
  std::string curve_text;
  std::uint64_t prime = 0, n = 0, limit = 0, modulus = 0;
  std::int64_t residue = 0;

  auto add_curve = [&](CLI::App* sub) {
    sub->add_option("--curve", curve_text, "Curve coefficients as a,b")->required();
    sub->add_option("--cache", cfg.cache_path,
                    "Prime data cache (p,good,N_p,a_p,t_p per line); read if present, rewritten after");
  };

  auto* ap = app.add_subcommand("ap", "Print the trace a_p");
  auto* exponent = app.add_subcommand("exponent", "Print N_p = #E(F_p) and the group exponent t_p");
  for (auto* sub : {ap, exponent}) {
    add_curve(sub);
    sub->add_option("--prime", prime, "Prime p")->required();
  }

  auto* an = app.add_subcommand("an", "Print the L-series coefficient a_n");
  auto* verify = app.add_subcommand(
      "verify", "Print the certificate for n; exit 0 if E-Carmichael, 3 if not");
  for (auto* sub : {an, verify}) {
    add_curve(sub);
    sub->add_option("--n", n, "Integer n >= 1")->required();
  }

  auto* search_cmd = app.add_subcommand("search", "List all E-Carmichael n <= limit");
  auto* stats = app.add_subcommand(
      "stats", "CSV of N_E(x) against the reference curve x (log3 x)^1/2 (log4 x)^1/2 / "
               "(log2 x)^1/4 (constant 1; not a proved bound)");
  for (auto* sub : {search_cmd, stats}) {
    add_curve(sub);
    sub->add_option("--limit", limit, "Search limit X")->required();
    sub->add_option("--threads", cfg.threads, "Worker threads")
        ->check(CLI::Range(1u, 1024u));
  }
  stats->add_option("--checkpoints", cfg.checkpoints,
                    "'log10' for 10, 100, ..., or an ascending comma-separated list");

  auto* pi_ea = app.add_subcommand("pi-ea", "Count good primes p <= limit with a_p = a");
  auto* pi_eab = app.add_subcommand(
      "pi-eab", "Count good primes p <= limit with #E(F_p) = a (mod b); bad primes are never counted");
  auto* an_cong = app.add_subcommand(
      "an-cong", "Count n <= limit with only good prime factors and a_n = a (mod p)");
  for (auto* sub : {pi_ea, pi_eab, an_cong}) {
    add_curve(sub);
    sub->add_option("--limit", limit, "Upper bound x")->required();
    sub->add_option("--a", residue, "Target value a")->required();
  }
  pi_eab->add_option("--b", modulus, "Modulus b >= 1")->required();
  an_cong->add_option("--p", modulus, "Prime modulus p")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    out << target->help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ecarm: " << e.what() << '\n';
    return kExitUsage;
  }

  const CLI::App* sub = app.get_subcommands().front();
  cfg.command = sub->get_name();
  const auto given = [&](const char* name) {
    const CLI::Option* opt = sub->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  if (given("--prime")) cfg.prime = prime;
  if (given("--n")) cfg.n = n;
  if (given("--limit")) cfg.limit = limit;
  if (given("--a")) cfg.residue = residue;
  if (given("--b") || given("--p")) cfg.modulus = modulus;
  cfg.output = cfg.command == "verify"  ? OutputFormat::certificate_text
               : cfg.command == "stats" ? OutputFormat::csv
                                        : OutputFormat::plain;

  try {
    std::tie(cfg.curve_a, cfg.curve_b) = parse_coefficients(curve_text);
  } catch (const std::invalid_argument& e) {
    err << "ecarm: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    return execute(cfg, out);
  } catch (const UsageError& e) {
    err << "ecarm: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BadReduction& e) {
    err << "ecarm: " << e.what() << " (the curve is singular modulo this prime)\n";
    return kExitRejectedInput;
  } catch (const BadPrimeFactor& e) {
    err << "ecarm: a_n undefined: " << e.what() << " has bad reduction\n";
    return kExitRejectedInput;
  } catch (const RejectedInput& e) {
    err << "ecarm: " << e.what() << '\n';
    return kExitRejectedInput;
  } catch (const LimitExceeded& e) {
    err << "ecarm: " << e.what() << '\n';
    return kExitRejectedInput;
  } catch (const CacheFormatError& e) {
    err << "ecarm: cache rejected: " << e.what() << '\n';
    return kExitRejectedInput;
  } catch (const std::exception& e) {
    err << "ecarm: " << e.what() << '\n';
    return kExitRejectedInput;
  }
}

}  // namespace ecarm::cli
