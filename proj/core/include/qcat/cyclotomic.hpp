#pragma once

// Cyclotomic polynomials Phi_n(q), Euler's totient, and the on-disk cache.

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <utility>

#include "qcat/exactpoly.hpp"

namespace qcat {

/// Euler's totient by trial division. Throws std::domain_error("totient
/// undefined") for n = 0.
std::uint64_t totient(std::uint64_t n);

/// Environment variable naming the cache directory.
inline constexpr const char* kCacheDirEnv = "QCAT_CACHE_DIR";
/// File name of the cache inside its directory.
inline constexpr const char* kCacheFileName = "cyclotomic.txt";

/// Memo of Phi_n(q), computed as (q^n - 1) / prod_{d | n, d < n} Phi_d(q).
///
/// Reads are concurrent; inserts publish a fully computed value under an
/// exclusive lock, so two threads racing on the same n both compute the
/// identical polynomial and the first insert wins. When a backing file is
/// configured it is loaded on first use; a missing file is an empty cache.
class CyclotomicCache {
 public:
  CyclotomicCache() = default;
  explicit CyclotomicCache(std::filesystem::path file) : file_(std::move(file)) {}

  CyclotomicCache(const CyclotomicCache&) = delete;
  CyclotomicCache& operator=(const CyclotomicCache&) = delete;

  IntPoly get(std::uint64_t n);
  /// Computes Phi_1 .. Phi_n_max.
  void warm(std::uint64_t n_max);

  std::size_t size() const;
  std::map<std::uint64_t, IntPoly> snapshot() const;
  const std::optional<std::filesystem::path>& file() const { return file_; }

  /// Writes every entry to the backing file. Throws std::runtime_error when
  /// no file is configured or the write fails.
  void save() const;
  /// Drops in-memory entries and re-reads the backing file, if any.
  void reload();

 private:
  void load_once();
  IntPoly compute(std::uint64_t n);

  std::optional<std::filesystem::path> file_;
  std::once_flag loaded_;
  mutable std::shared_mutex mutex_;
  std::map<std::uint64_t, IntPoly> entries_;
};

/// "n: c0,c1,...,cd"
std::string format_cache_record(std::uint64_t n, const IntPoly& phi);
/// Inverse of format_cache_record; throws std::invalid_argument.
std::pair<std::uint64_t, IntPoly> parse_cache_record(std::string_view line);

/// Cache directory: the explicit flag value when given, else the
/// environment variable, else none.
std::optional<std::filesystem::path> resolve_cache_dir(
    const std::optional<std::filesystem::path>& flag_value);

/// Process-wide cache used by cyclotomic() and RingSpec.
CyclotomicCache& default_cyclotomic_cache();
/// Replaces the process-wide cache with one backed by dir/cyclotomic.txt
/// (or an in-memory cache for an empty optional). Not safe while other
/// threads use the cache.
void configure_default_cyclotomic_cache(const std::optional<std::filesystem::path>& dir);

IntPoly cyclotomic(std::uint64_t n);
/// Phi_n(q)^e
IntPoly cyclotomic_power(std::uint64_t n, std::uint64_t e);

}  // namespace qcat
