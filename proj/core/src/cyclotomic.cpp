#include "qcat/cyclotomic.hpp"

#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qcat {

std::uint64_t totient(std::uint64_t n) {
  if (n == 0) throw std::domain_error("totient undefined");
  std::uint64_t result = n;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

IntPoly CyclotomicCache::get(std::uint64_t n) {
  if (n == 0) throw std::domain_error("cyclotomic index must be positive");
  load_once();
  {
    std::shared_lock lock(mutex_);
    if (auto it = entries_.find(n); it != entries_.end()) return it->second;
  }
  IntPoly phi = compute(n);
  std::unique_lock lock(mutex_);
  return entries_.try_emplace(n, std::move(phi)).first->second;
}

IntPoly CyclotomicCache::compute(std::uint64_t n) {
  std::vector<Integer> top(n + 1);
  top[0] = -1;
  top[n] = 1;
  IntPoly phi(std::move(top));
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d == 0) phi = exact_div(phi, get(d));
  }
  return phi;
}

void CyclotomicCache::warm(std::uint64_t n_max) {
  for (std::uint64_t n = 1; n <= n_max; ++n) get(n);
}

std::size_t CyclotomicCache::size() const {
  const_cast<CyclotomicCache*>(this)->load_once();
  std::shared_lock lock(mutex_);
  return entries_.size();
}

std::map<std::uint64_t, IntPoly> CyclotomicCache::snapshot() const {
  const_cast<CyclotomicCache*>(this)->load_once();
  std::shared_lock lock(mutex_);
  return entries_;
}

void CyclotomicCache::save() const {
  if (!file_) throw std::runtime_error("no cache file configured");
  const auto entries = snapshot();
  std::error_code ec;
  if (file_->has_parent_path()) std::filesystem::create_directories(file_->parent_path(), ec);
  if (ec) throw std::runtime_error("cannot create cache directory " + file_->parent_path().string() + ": " + ec.message());
  const auto tmp = std::filesystem::path(file_->string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    for (const auto& [n, phi] : entries) out << format_cache_record(n, phi) << '\n';
    out.flush();
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, *file_, ec);
  if (ec) throw std::runtime_error("cannot replace cache file " + file_->string() + ": " + ec.message());
}

void CyclotomicCache::reload() {
  std::map<std::uint64_t, IntPoly> fresh;
  if (file_ && std::filesystem::exists(*file_)) {
    std::ifstream in(*file_);
    if (!in) throw std::runtime_error("cannot read cache file " + file_->string());
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto [n, phi] = parse_cache_record(line);
      if (phi.degree() != totient(n) || phi.leading() != 1)
        throw std::runtime_error("corrupt cache entry for n = " + std::to_string(n) + " in " +
                                 file_->string());
      fresh.insert_or_assign(n, std::move(phi));
    }
  }
  std::unique_lock lock(mutex_);
  entries_ = std::move(fresh);
}

void CyclotomicCache::load_once() {
  std::call_once(loaded_, [this] {
    if (file_) reload();
  });
}

std::string format_cache_record(std::uint64_t n, const IntPoly& phi) {
  std::string out = std::to_string(n) + ":";
  const auto cs = phi.coeffs();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    out += i == 0 ? " " : ",";
    out += cs[i].get_str();
  }
  return out;
}

std::pair<std::uint64_t, IntPoly> parse_cache_record(std::string_view line) {
  const auto colon = line.find(':');
  if (colon == std::string_view::npos || colon == 0)
    throw std::invalid_argument("malformed cache record: " + std::string(line));
  std::uint64_t n = 0;
  for (char ch : line.substr(0, colon)) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("malformed cache record: " + std::string(line));
    n = n * 10 + static_cast<std::uint64_t>(ch - '0');
  }
  if (n == 0) throw std::invalid_argument("malformed cache record: " + std::string(line));
  std::vector<Integer> coeffs;
  std::stringstream rest{std::string(line.substr(colon + 1))};
  std::string item;
  while (std::getline(rest, item, ',')) {
    const auto first = item.find_first_not_of(' ');
    const auto last = item.find_last_not_of(' ');
    if (first == std::string::npos) throw std::invalid_argument("malformed cache record: " + std::string(line));
    Integer c;
    if (c.set_str(item.substr(first, last - first + 1), 10) != 0)
      throw std::invalid_argument("malformed cache record: " + std::string(line));
    coeffs.push_back(std::move(c));
  }
  return {n, IntPoly(std::move(coeffs))};
}

std::optional<std::filesystem::path> resolve_cache_dir(
    const std::optional<std::filesystem::path>& flag_value) {
  if (flag_value) return flag_value;
  if (const char* env = std::getenv(kCacheDirEnv); env != nullptr && *env != '\0')
    return std::filesystem::path(env);
  return std::nullopt;
}

namespace {
std::unique_ptr<CyclotomicCache>& default_cache_slot() {
  static std::unique_ptr<CyclotomicCache> slot = std::make_unique<CyclotomicCache>();
  return slot;
}
}  // namespace

CyclotomicCache& default_cyclotomic_cache() { return *default_cache_slot(); }

void configure_default_cyclotomic_cache(const std::optional<std::filesystem::path>& dir) {
  if (dir)
    default_cache_slot() = std::make_unique<CyclotomicCache>(*dir / kCacheFileName);
  else
    default_cache_slot() = std::make_unique<CyclotomicCache>();
}

IntPoly cyclotomic(std::uint64_t n) { return default_cyclotomic_cache().get(n); }

IntPoly cyclotomic_power(std::uint64_t n, std::uint64_t e) {
  IntPoly phi = cyclotomic(n);
  IntPoly r{1};
  for (std::uint64_t i = 0; i < e; ++i) r = mul(r, phi);
  return r;
}

}  // namespace qcat
