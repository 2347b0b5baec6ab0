#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qcat/cyclotomic.hpp"
#include "qcat/qseries.hpp"
#include "qcat/runner.hpp"

namespace qcat::cli {

namespace {

namespace fs = std::filesystem;

// Thrown for bad arguments that CLI11 itself cannot catch.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_uint(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end)
    throw UsageError("malformed " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

double elapsed_ms(const ClaimReport& r, bool timing) {
  if (!timing) return 0.0;
  return std::chrono::duration<double, std::milli>(r.elapsed).count();
}

std::vector<ClaimId> select_claims(const std::vector<std::string>& names) {
  if (names.empty()) return {all_claims().begin(), all_claims().end()};
  std::set<ClaimId> chosen;
  for (const auto& name : names) {
    if (name == "all") {
      chosen.insert(all_claims().begin(), all_claims().end());
      continue;
    }
    const auto id = parse_claim(name);
    if (!id) throw UsageError("unknown claim '" + name + "'");
    chosen.insert(*id);
  }
  return {chosen.begin(), chosen.end()};
}

std::optional<fs::path> cache_dir_from(const std::string& flag) {
  return resolve_cache_dir(flag.empty() ? std::nullopt : std::optional<fs::path>(flag));
}

struct VerifyArgs {
  std::vector<std::string> claims;
  std::string n_range = "1..100";
  std::uint64_t p_max = 0;
  std::string format = "text";
  std::size_t parallel = 1;
  std::string cache_dir;
  bool fail_fast = false;
  std::uint64_t modulus_power = 0;
  bool no_timing = false;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  const auto claims = select_claims(args.claims);
  NRange range{};
  try {
    range = parse_n_range(args.n_range);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (args.parallel == 0) throw UsageError("--parallel must be at least 1");

  const auto dir = cache_dir_from(args.cache_dir);
  configure_default_cyclotomic_cache(dir);

  RunOptions options;
  options.parallelism = args.parallel;
  options.fail_fast = args.fail_fast;
  options.modulus_power = args.modulus_power;
  if (args.p_max != 0) options.p_max = args.p_max;

  std::vector<ClaimReport> reports;
  const bool single = claims.size() == 1 && range.from == range.to && !options.p_max;
  try {
    if (single) {
      // One claim at one n: an unstated case is the caller's mistake.
      reports.push_back(verify_claim(claims.front(), range.from, options.modulus_power));
    } else {
      reports = run_claims(claims, range.from, range.to, options);
    }
  } catch (const NotApplicable& e) {
    err << "qcat: " << claim_name(claims.front()) << " at n = " << range.from << ": " << e.what()
        << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "qcat: " << e.what() << '\n';
    return kExitUsage;
  }

  if (dir) {
    try {
      default_cyclotomic_cache().save();
    } catch (const std::exception& e) {
      err << "qcat: warning: " << e.what() << '\n';
    }
  }

  const bool timing = !args.no_timing;
  out << (args.format == "json" ? render_json(reports, timing) : render_text(reports, timing));
  for (const auto& r : reports)
    if (r.status == ClaimStatus::fails) return kExitFails;
  return kExitHolds;
}

int cmd_show(const std::string& object, const std::vector<std::string>& raw, std::ostream& out) {
  const auto arity = [&](std::size_t want) {
    if (raw.size() != want)
      throw UsageError("show " + object + " takes " + std::to_string(want) + " argument" +
                       (want == 1 ? "" : "s"));
  };
  if (object == "cyclotomic") {
    arity(1);
    const auto n = parse_uint(raw[0], "index");
    if (n == 0) throw UsageError("cyclotomic index must be positive");
    out << to_string(cyclotomic(n)) << '\n';
  } else if (object == "qbinom") {
    arity(2);
    const auto n = static_cast<std::int64_t>(parse_uint(raw[0], "n"));
    const auto k = static_cast<std::int64_t>(parse_uint(raw[1], "k"));
    out << to_string(q_binomial(n, k)) << '\n';
  } else if (object == "qcatalan") {
    arity(1);
    out << to_string(q_catalan(parse_uint(raw[0], "n"))) << '\n';
  } else if (object == "qint") {
    arity(1);
    out << to_string(q_integer(parse_uint(raw[0], "n"))) << '\n';
  } else {
    throw UsageError("unknown object '" + object + "'");
  }
  return kExitHolds;
}

int cmd_cache(const std::string& action, const std::vector<std::string>& raw,
              const std::string& flag, std::ostream& out, std::ostream& err) {
  const auto dir = cache_dir_from(flag);
  if (!dir) throw UsageError(std::string("no cache directory; pass --cache-dir or set ") + kCacheDirEnv);
  const fs::path file = *dir / kCacheFileName;

  if (action == "warm") {
    if (raw.size() != 1) throw UsageError("cache warm takes one argument");
    const auto n_max = parse_uint(raw[0], "n_max");
    if (n_max == 0) throw UsageError("n_max must be positive");
    CyclotomicCache cache(file);
    try {
      cache.warm(n_max);
      cache.save();
    } catch (const std::exception& e) {
      err << "qcat: " << e.what() << '\n';
      return kExitFails;
    }
    out << cache.size() << " entries persisted to " << file.string() << '\n';
    return kExitHolds;
  }
  if (!raw.empty()) throw UsageError("cache " + action + " takes no arguments");
  if (action == "stat") {
    CyclotomicCache cache(file);
    std::size_t entries = 0;
    try {
      entries = cache.size();
    } catch (const std::exception& e) {
      err << "qcat: " << e.what() << '\n';
      return kExitFails;
    }
    std::error_code ec;
    const auto bytes = fs::exists(file) ? fs::file_size(file, ec) : 0;
    out << entries << " entries, " << (ec ? 0 : bytes) << " bytes, " << file.string() << '\n';
    return kExitHolds;
  }
  if (action == "clear") {
    std::error_code ec;
    const bool removed = fs::remove(file, ec);
    if (ec) {
      err << "qcat: cannot remove " << file.string() << ": " << ec.message() << '\n';
      return kExitFails;
    }
    out << (removed ? "removed " : "nothing to remove at ") << file.string() << '\n';
    return kExitHolds;
  }
  throw UsageError("unknown cache action '" + action + "'");
}

}  // namespace

NRange parse_n_range(std::string_view text) {
  const auto bad = [&] { return std::invalid_argument("malformed n range '" + std::string(text) + "'"); };
  const auto number = [&](std::string_view s) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || v == 0) throw bad();
    return v;
  };
  const auto dots = text.find("..");
  NRange r{};
  if (dots == std::string_view::npos) {
    r.from = r.to = number(text);
  } else {
    r.from = number(text.substr(0, dots));
    r.to = number(text.substr(dots + 2));
  }
  if (r.from > r.to) throw bad();
  return r;
}

std::string truncate_witness(const RatPoly& witness, std::size_t max_terms) {
  const auto cs = witness.coeffs();
  std::vector<Rational> kept;
  std::size_t terms = 0;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i] == 0) continue;
    if (++terms <= max_terms) {
      kept.resize(i + 1);
      kept[i] = cs[i];
    }
  }
  if (terms <= max_terms) return to_string(witness);
  return to_string(RatPoly(std::move(kept))) + " + ... [degree " + std::to_string(*witness.degree()) +
         ", " + std::to_string(terms) + " terms]";
}

std::string render_json(const std::vector<ClaimReport>& reports, bool timing) {
  auto doc = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json rec;
    rec["claim"] = claim_name(r.claim);
    rec["n"] = r.n;
    rec["status"] = status_name(r.status);
    if (r.status == ClaimStatus::fails) rec["witness"] = to_string(r.witness);
    rec["ms"] = elapsed_ms(r, timing);
    doc.push_back(std::move(rec));
  }
  return doc.dump(2) + "\n";
}

std::string render_text(const std::vector<ClaimReport>& reports, bool timing) {
  std::ostringstream os;
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& r : reports) {
    ++counts[static_cast<int>(r.status)];
    os << std::left << std::setw(18) << claim_name(r.claim) << " n=" << std::setw(5) << r.n << ' '
       << status_name(r.status);
    if (r.status != ClaimStatus::skipped)
      os << "  " << std::fixed << std::setprecision(3) << elapsed_ms(r, timing) << " ms";
    if (r.status == ClaimStatus::fails) os << "\n  witness: " << truncate_witness(r.witness);
    os << '\n';
  }
  os << counts[0] << " holds, " << counts[1] << " fails, " << counts[2] << " skipped\n";
  return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of q-congruences for q-Catalan and central q-binomial sums"};
  app.name("qcat");
  app.require_subcommand(1);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "verify claims over a range of n");
  v->add_option("--claim", verify.claims, "claim id, repeatable or comma separated; 'all' for every claim")
      ->delimiter(',');
  v->add_option("--n", verify.n_range, "A..B or A")->capture_default_str();
  v->add_option("--p-max", verify.p_max, "run classical claims at every prime 5 <= p <= P");
  v->add_option("--format", verify.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  v->add_option("--parallel", verify.parallel, "worker threads")->capture_default_str();
  v->add_option("--cache-dir", verify.cache_dir, std::string("cyclotomic cache directory (default $") + kCacheDirEnv + ")");
  v->add_flag("--fail-fast", verify.fail_fast, "stop scheduling work after the first failure");
  v->add_option("--modulus-power", verify.modulus_power, "diagnostic modulus power for the mod Phi_n^2 claims")
      ->check(CLI::IsMember({1, 2}));
  v->add_flag("--no-timing", verify.no_timing, "report ms as 0 for reproducible output");

  std::string show_object;
  std::vector<std::string> show_args;
  auto* s = app.add_subcommand("show", "print a polynomial");
  s->add_option("object", show_object, "cyclotomic, qbinom, qcatalan or qint")->required();
  s->add_option("args", show_args, "integer arguments");

  std::string cache_action;
  std::vector<std::string> cache_args;
  std::string cache_flag;
  auto* c = app.add_subcommand("cache", "manage the persistent cyclotomic cache");
  c->add_option("action", cache_action, "warm N, stat or clear")->required();
  c->add_option("args", cache_args, "arguments of the action");
  c->add_option("--cache-dir", cache_flag, "cache directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitHolds : kExitUsage;
  }

  try {
    if (v->parsed()) return cmd_verify(verify, out, err);
    if (s->parsed()) return cmd_show(show_object, show_args, out);
    if (c->parsed()) return cmd_cache(cache_action, cache_args, cache_flag, out, err);
  } catch (const UsageError& e) {
    err << "qcat: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "qcat: error: " << e.what() << '\n';
    return kExitFails;
  }
  return kExitUsage;
}

}  // namespace qcat::cli
