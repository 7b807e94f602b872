#include <gtest/gtest.h>

#include <json.hpp>

#include "cgf/verify.hpp"
#include "support.hpp"

using namespace cgf;

namespace {

const QNum kTiny = QNum::ratio(1, 1000000);

}  // namespace

TEST(Verify, PsiSeparation) {
  const auto r = verify_psi_separation();
  EXPECT_TRUE(r.verified()) << format_report(r);
  EXPECT_TRUE(r.witness.empty());
  EXPECT_FALSE(r.checks.empty());
}

TEST(Verify, PsiPrimeEqualsPsiIsRefuted) {
  const auto r = verify_psi_separation(psi_function(), psi_function());
  EXPECT_EQ(r.status, ClaimStatus::refuted);
  EXPECT_FALSE(r.witness.empty());
}

TEST(Verify, PsiMutated) {
  const auto bad = testkit::mutate_value(psi_function(), 2, kTiny);
  EXPECT_EQ(verify_psi_separation(bad).status, ClaimStatus::refuted);
  const auto bad2 = testkit::mutate_value(psi_prime_function(), 1, kTiny);
  EXPECT_EQ(verify_psi_separation(psi_function(), bad2).status, ClaimStatus::refuted);
}

TEST(Verify, KzhSlacks) {
  const auto r = verify_kzh_claim_slacks();
  EXPECT_TRUE(r.verified()) << format_report(r);
  const auto bad = testkit::mutate_value(kzh_function(), 17, kTiny);
  EXPECT_EQ(verify_kzh_claim_slacks(bad).status, ClaimStatus::refuted);
}

TEST(Verify, KzhRank) {
  const auto r = verify_kzh_perturbation_rank();
  EXPECT_TRUE(r.verified()) << format_report(r);
  const auto bad = testkit::mutate_value(kzh_function(), 17, kTiny);
  EXPECT_EQ(verify_kzh_perturbation_rank(bad).status, ClaimStatus::refuted);
}

TEST(Verify, LiftedSmallSample) {
  const auto r = verify_lifted(kzh_function(), LiftedSampling{4});
  EXPECT_TRUE(r.verified()) << format_report(r);
  const auto bad = testkit::mutate_value(kzh_function(), 17, kTiny);
  EXPECT_EQ(verify_lifted(bad, LiftedSampling{4}).status, ClaimStatus::refuted);
}

TEST(Verify, JsonDeterministic) {
  const auto a = report_json(verify_psi_separation());
  const auto b = report_json(verify_psi_separation(psi_function(), psi_prime_function(), Exec::serial));
  EXPECT_EQ(a, b);
  const auto j = nlohmann::json::parse(a);
  EXPECT_EQ(j["status"], "verified");
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_FALSE(j.contains("seconds"));
}
