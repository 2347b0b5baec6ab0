#include "qcat/runner.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "qcat/classical.hpp"
#include "qcat/congruences.hpp"
#include "qcat/cyclotomic.hpp"

namespace qcat {

ClaimReport verify_claim(ClaimId claim, std::uint64_t n, std::uint64_t modulus_power) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  switch (claim) {
    case ClaimId::central_sum:
      return verify_central_sum(n, modulus_power);
    case ClaimId::catalan_sum:
      return verify_catalan_sum(n, modulus_power);
    case ClaimId::binom_kplus1_sum:
      return verify_binom_kplus1_sum(n, modulus_power);
    case ClaimId::tauraso_weak:
      return verify_tauraso_weak(n);
    case ClaimId::lemma_sum:
      return verify_lemma_sum(n);
    case ClaimId::case1_identity:
      return verify_case1_identity(n);
    case ClaimId::case2_identity:
      return verify_case2_identity(n);
    case ClaimId::petrov_identity:
      return verify_petrov_identity(n);
    case ClaimId::tauraso_identity:
      return verify_tauraso_identity(n);
    case ClaimId::binom_2n_k:
      return verify_binom_2n_k_all(n, modulus_power);
    case ClaimId::intermediate:
      return verify_intermediate_congruence(n, modulus_power);
    case ClaimId::classical_central:
      return verify_classical_central(n);
    case ClaimId::classical_catalan:
      return verify_classical_catalan(n);
  }
  throw std::invalid_argument("unknown claim");
}

std::vector<std::uint64_t> ring_indices(ClaimId claim, std::uint64_t n) {
  switch (claim) {
    case ClaimId::case1_identity:
      return {3 * n + 2};
    case ClaimId::case2_identity:
    case ClaimId::petrov_identity:
      return {3 * n + 1};
    case ClaimId::tauraso_identity:
    case ClaimId::classical_central:
    case ClaimId::classical_catalan:
      return {};
    default:
      return {n};
  }
}

namespace {

struct WorkItem {
  std::uint64_t n;
  ClaimId claim;
};

struct Slot {
  std::optional<ClaimReport> report;
  std::exception_ptr error;
};

}  // namespace

std::vector<ClaimReport> run_claims(std::span<const ClaimId> claims, std::uint64_t n_from,
                                    std::uint64_t n_to, const RunOptions& options) {
  if (n_from == 0 || n_from > n_to) throw std::invalid_argument("malformed n range");
  if (options.parallelism == 0) throw std::invalid_argument("parallelism must be at least 1");

  std::vector<WorkItem> items;
  for (ClaimId claim : claims) {
    if (is_classical(claim)) {
      const std::uint64_t lo = options.p_max ? 5 : std::max<std::uint64_t>(5, n_from);
      const std::uint64_t hi = options.p_max.value_or(n_to);
      for (std::uint64_t p = lo; p <= hi; ++p)
        if (is_prime(p)) items.push_back({p, claim});
    } else {
      for (std::uint64_t n = n_from; n <= n_to; ++n) items.push_back({n, claim});
    }
  }
  std::sort(items.begin(), items.end(), [](const WorkItem& a, const WorkItem& b) {
    return std::tie(a.n, a.claim) < std::tie(b.n, b.claim);
  });
  items.erase(std::unique(items.begin(), items.end(),
                          [](const WorkItem& a, const WorkItem& b) {
                            return a.n == b.n && a.claim == b.claim;
                          }),
              items.end());

  // Warm every modulus up front so workers only read the cache.
  auto& cache = default_cyclotomic_cache();
  for (const auto& item : items)
    for (std::uint64_t m : ring_indices(item.claim, item.n)) cache.get(m);

  std::vector<Slot> slots(items.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};

  auto worker = [&] {
    while (!stop.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= items.size()) return;
      const auto& item = items[i];
      try {
        slots[i].report = verify_claim(item.claim, item.n, options.modulus_power);
      } catch (const NotApplicable&) {
        slots[i].report = ClaimReport::skipped(item.claim, item.n);
      } catch (...) {
        slots[i].error = std::current_exception();
        stop.store(true);
        return;
      }
      if (options.fail_fast && slots[i].report->status == ClaimStatus::fails) stop.store(true);
    }
  };

  const std::size_t workers = std::min(options.parallelism, std::max<std::size_t>(items.size(), 1));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
  }

  std::vector<ClaimReport> reports;
  reports.reserve(items.size());
  for (auto& slot : slots) {
    if (slot.error) std::rethrow_exception(slot.error);
    if (slot.report) reports.push_back(std::move(*slot.report));
  }
  return reports;
}

std::vector<ClaimReport> run_claim_range(ClaimId claim, std::uint64_t n_from, std::uint64_t n_to,
                                         const RunOptions& options) {
  const ClaimId one[] = {claim};
  return run_claims(one, n_from, n_to, options);
}

}  // namespace qcat
