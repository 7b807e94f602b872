#pragma once

// Claim suites for the separation results.

#include <string>
#include <utility>
#include <vector>

#include "cgf/catalog.hpp"
#include "cgf/exec.hpp"
#include "cgf/pwl.hpp"

namespace cgf {

enum class ClaimStatus { verified, refuted, skipped };
std::string to_string(ClaimStatus s);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ClaimReport {
  std::string claim;
  ClaimStatus status = ClaimStatus::skipped;
  /// Exact witness of the first failed check.
  std::string witness;
  std::vector<CheckResult> checks;
  std::vector<std::pair<std::string, std::string>> stats;
  double seconds = 0;

  bool verified() const { return status == ClaimStatus::verified; }
  const CheckResult* check(const std::string& name) const;
};

ClaimReport verify_psi_separation(const PwlFunction& psi = psi_function(),
                                  const PwlFunction& psi_prime = psi_prime_function(),
                                  Exec exec = Exec::parallel);
ClaimReport verify_kzh_claim_slacks(const PwlFunction& pi = kzh_function(),
                                    Exec exec = Exec::parallel);
ClaimReport verify_kzh_perturbation_rank(const PwlFunction& pi = kzh_function(),
                                         Exec exec = Exec::parallel);

struct LiftedSampling {
  /// Sample points per face per coset class.
  std::size_t per_class = 100;
};
ClaimReport verify_lifted(const PwlFunction& pi = kzh_function(), LiftedSampling opts = {},
                          Exec exec = Exec::parallel);

std::vector<ClaimReport> verify_all(Exec exec = Exec::parallel);

/// Human-readable and JSON renderings (the JSON omits the runtime).
std::string format_report(const ClaimReport& r);
std::string report_json(const ClaimReport& r);

}  // namespace cgf
