#include "qcat/runner.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <tuple>

#include "test_support.hpp"

namespace qcat {
namespace {

std::size_t count_status(const std::vector<ClaimReport>& rs, ClaimStatus s) {
  return static_cast<std::size_t>(
      std::count_if(rs.begin(), rs.end(), [s](const ClaimReport& r) { return r.status == s; }));
}

// Everything except elapsed time.
using Fact = std::tuple<ClaimId, std::uint64_t, ClaimStatus, std::string>;

std::vector<Fact> facts(const std::vector<ClaimReport>& rs) {
  std::vector<Fact> out;
  for (const auto& r : rs) out.emplace_back(r.claim, r.n, r.status, to_string(r.witness));
  return out;
}

TEST(Runner, CatalanSumSkipsMultiplesOfThree) {
  const auto rs = run_claim_range(ClaimId::catalan_sum, 1, 10);
  ASSERT_EQ(rs.size(), 10u);
  EXPECT_EQ(count_status(rs, ClaimStatus::holds), 7u);
  EXPECT_EQ(count_status(rs, ClaimStatus::skipped), 3u);
  for (const auto& r : rs) EXPECT_EQ(r.status == ClaimStatus::skipped, r.n % 3 == 0) << r.n;
}

TEST(Runner, CentralSumAllHold) {
  const auto rs = run_claim_range(ClaimId::central_sum, 1, 50, {.parallelism = 4});
  ASSERT_EQ(rs.size(), 50u);
  EXPECT_EQ(count_status(rs, ClaimStatus::holds), 50u);
}

TEST(Runner, Case2AllHold) {
  const auto rs = run_claim_range(ClaimId::case2_identity, 1, 20);
  EXPECT_EQ(count_status(rs, ClaimStatus::holds), 20u);
}

TEST(Runner, OrderedByNThenClaim) {
  const ClaimId claims[] = {ClaimId::lemma_sum, ClaimId::central_sum, ClaimId::binom_2n_k};
  const auto rs = run_claims(claims, 1, 12, {.parallelism = 3});
  ASSERT_EQ(rs.size(), 36u);
  for (std::size_t i = 1; i < rs.size(); ++i)
    EXPECT_LT(std::tie(rs[i - 1].n, rs[i - 1].claim), std::tie(rs[i].n, rs[i].claim));
  EXPECT_EQ(rs[0].claim, ClaimId::central_sum);
  EXPECT_EQ(rs[0].n, 1u);
  EXPECT_EQ(rs[2].claim, ClaimId::binom_2n_k);
  EXPECT_EQ(rs[2].status, ClaimStatus::skipped);
}

TEST(Runner, DuplicateClaimsCollapse) {
  const ClaimId claims[] = {ClaimId::central_sum, ClaimId::central_sum};
  EXPECT_EQ(run_claims(claims, 1, 5).size(), 5u);
}

TEST(Runner, ParallelMatchesSerial) {
  const auto all = all_claims();
  const auto serial = run_claims(all, 1, 25, {.parallelism = 1});
  const auto parallel = run_claims(all, 1, 25, {.parallelism = 4});
  EXPECT_EQ(facts(serial), facts(parallel));
  EXPECT_EQ(count_status(serial, ClaimStatus::fails), 0u);
}

TEST(Runner, ClassicalClaimsUsePrimes) {
  const ClaimId claims[] = {ClaimId::classical_central, ClaimId::classical_catalan};
  const auto in_range = run_claims(claims, 1, 30);
  std::vector<std::uint64_t> ns;
  for (const auto& r : in_range) ns.push_back(r.n);
  EXPECT_EQ(ns, (std::vector<std::uint64_t>{5, 5, 7, 7, 11, 11, 13, 13, 17, 17, 19, 19, 23, 23, 29, 29}));

  RunOptions opts;
  opts.p_max = 1000;
  opts.parallelism = 4;
  const auto by_pmax = run_claims(claims, 1, 1, opts);
  EXPECT_EQ(by_pmax.size(), 2u * 166u);
  EXPECT_EQ(count_status(by_pmax, ClaimStatus::holds), by_pmax.size());
}

TEST(Runner, RejectsBadInput) {
  EXPECT_THROW_MSG(run_claim_range(ClaimId::central_sum, 5, 4), std::invalid_argument,
                   "malformed n range");
  EXPECT_THROW_MSG(run_claim_range(ClaimId::central_sum, 0, 4), std::invalid_argument,
                   "malformed n range");
  EXPECT_THROW_MSG(run_claim_range(ClaimId::central_sum, 1, 4, {.parallelism = 0}),
                   std::invalid_argument, "parallelism must be at least 1");
}

TEST(Runner, VerifyClaimPropagatesNotApplicable) {
  EXPECT_THROW(verify_claim(ClaimId::catalan_sum, 3), NotApplicable);
  EXPECT_TRUE(verify_claim(ClaimId::catalan_sum, 2).holds());
}

TEST(Runner, RingIndices) {
  EXPECT_EQ(ring_indices(ClaimId::case1_identity, 4), std::vector<std::uint64_t>{14});
  EXPECT_EQ(ring_indices(ClaimId::petrov_identity, 4), std::vector<std::uint64_t>{13});
  EXPECT_TRUE(ring_indices(ClaimId::tauraso_identity, 4).empty());
  EXPECT_EQ(ring_indices(ClaimId::catalan_sum, 4), std::vector<std::uint64_t>{4});
}

TEST(Runner, ModulusPowerOverride) {
  // Power 3 is beyond what is claimed; some n must fail and be reported.
  const auto rs = run_claim_range(ClaimId::central_sum, 1, 20, {.modulus_power = 3});
  EXPECT_GT(count_status(rs, ClaimStatus::fails), 0u);
  for (const auto& r : rs) EXPECT_EQ(r.status == ClaimStatus::fails, !r.witness.is_zero());
}

TEST(Runner, FailFastStopsEarlyButKeepsCompletedReports) {
  const auto full = run_claim_range(ClaimId::central_sum, 1, 60, {.modulus_power = 3});
  const auto first_fail = std::find_if(full.begin(), full.end(),
                                       [](const ClaimReport& r) { return r.status == ClaimStatus::fails; });
  ASSERT_NE(first_fail, full.end());

  const auto serial = run_claim_range(ClaimId::central_sum, 1, 60, {.fail_fast = true, .modulus_power = 3});
  ASSERT_FALSE(serial.empty());
  EXPECT_EQ(serial.back().status, ClaimStatus::fails);
  EXPECT_EQ(serial.size(), static_cast<std::size_t>(first_fail - full.begin()) + 1);

  const auto parallel = run_claim_range(ClaimId::central_sum, 1, 60,
                                        {.parallelism = 4, .fail_fast = true, .modulus_power = 3});
  EXPECT_LT(parallel.size(), full.size());
  EXPECT_GT(count_status(parallel, ClaimStatus::fails), 0u);
  for (std::size_t i = 1; i < parallel.size(); ++i) EXPECT_LT(parallel[i - 1].n, parallel[i].n);
}

}  // namespace
}  // namespace qcat
