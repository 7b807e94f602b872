// One PASS/FAIL line per acceptance criterion.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "cgf/catalog.hpp"
#include "cgf/io.hpp"
#include "cgf/perturbation.hpp"
#include "cgf/verify.hpp"
#include "support.hpp"

using namespace cgf;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void line(int n, bool ok, const std::string& what) {
  std::printf("criterion %2d: %s  %s\n", n, ok ? "PASS" : "FAIL", what.c_str());
  std::fflush(stdout);
  failures += ok ? 0 : 1;
}

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

bool check_passed(const ClaimReport& r, const std::string& name) {
  const auto* c = r.check(name);
  return c && c->passed;
}

void criterion1() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string why;
  try {
    const auto& pi = kzh_function();
    std::ifstream in(std::string(CGF_GOLDEN_DIR) + "/kzh.txt");
    std::stringstream golden;
    golden << in.rdbuf();
    if (format_function(pi) != golden.str()) ok = false, why = "rows differ from golden table";
    if (pi.size() != 40) ok = false, why = "not 40 rows";
    if (kzh_s_from_table(pi) != parse_qnum("19/23998")) ok = false, why = "s differs";
  } catch (const std::exception& e) {
    ok = false;
    why = e.what();
  }
  const double s = since(t0);
  line(1, ok && s < 1.0, "kzh table: 40 rows and slopes exact, s = 19/23998 " + (why.empty() ? "" : why + " ") + "(" + fmt(s) + ")");
}

void criterion2() {
  const auto t0 = Clock::now();
  const bool psi = minimality_test(psi_function()).minimal;
  const bool pp = minimality_test(psi_prime_function()).minimal;
  const auto t1 = Clock::now();
  const bool kzh = minimality_test(kzh_function(), kzh_params().f).minimal;
  const double s = since(t1);
  (void)t0;
  line(2, psi && pp && kzh && s < 60.0,
       std::string("minimal: psi ") + (psi ? "yes" : "no") + ", psi' " + (pp ? "yes" : "no") + ", pi " +
           (kzh ? "yes" : "no") + " (pi sweep " + fmt(s) + ")");
}

void criterion3() {
  const auto r = verify_psi_separation();
  const auto c = e_containment(psi_function(), psi_prime_function());
  const bool ok = r.verified() && c.relation == Containment::strict_subset && c.only_second.has_value();
  line(3, ok, "E(psi) strict subset of E(psi') with witness " + c.only_second_label +
                  "; NE cone at (3/8,3/8) additive for psi, positive for psi'");
}

void criterion4() {
  const auto t0 = Clock::now();
  const auto r = verify_kzh_claim_slacks();
  const double s = since(t0);
  line(4, r.verified() && s < 120.0, "kzh slack dichotomy, tight vertices on n_F = 1, slacks >= 3s, no n_F = 3 (" +
                                        fmt(s) + ")");
}

void criterion5() {
  const auto r = verify_kzh_perturbation_rank();
  const bool ok = r.verified() && check_passed(r, "rank 39") && check_passed(r, "two slope components") &&
                  check_passed(r, "uncovered = special intervals");
  line(5, ok, "rank 39 over 39 variables, 2 components, 2 special intervals uncovered");
}

void criterion6() {
  const auto t0 = Clock::now();
  const auto r = verify_lifted(kzh_function(), LiftedSampling{100});
  std::string samples;
  for (const auto& [k, v] : r.stats) {
    if (k == "samples") samples = v;
  }
  line(6, r.verified(), "lifted function: slack classes, symmetry, |lift - pi| <= s attained, E equal (" + samples +
                            " samples, " + fmt(since(t0)) + ")");
}

void criterion7() {
  const auto pi = testkit::midpoint_pair();
  const auto bar = testkit::half_difference_pair();
  const bool pair_ok = minimality_test(testkit::gmic_half()).minimal &&
                       minimality_test(testkit::two_slope_half()).minimal && !bar.rows().empty();
  const auto lc = lipschitz_epsilon(pi, bar);
  const bool lip = lc.epsilon.sign() > 0 && verify_effective(pi, bar, lc.epsilon);
  const QNum se = scaling_epsilon(pi, bar);
  const bool sc = se.sign() > 0 && minimality_test(linear_combination(QNum(1), pi, -se, bar)).minimal;
  line(7, pair_ok && lip && sc,
       "lipschitz eps = " + format_qnum(lc.epsilon) + ", scaling eps = " + format_qnum(se));
}

void criterion8() {
  std::mt19937_64 rng(20240601);
  std::size_t violations = 0, points = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto inst = testkit::random_affine_instance(rng);
    for (const auto& p : testkit::sample_polygon(rng, inst.polygon, 16)) {
      ++points;
      violations += testkit::lemma_a1_holds(inst, p) ? 0 : 1;
    }
  }
  line(8, violations == 0,
       "distance bound on 1000 instances, " + std::to_string(points) + " points, " + std::to_string(violations) +
           " violations");
}

void criterion9() {
  std::mt19937_64 rng(9009);
  int disagree = 0, minimal = 0;
  for (int t = 0; t < 200; ++t) {
    const auto pi = testkit::random_symmetric_pwl(rng, 6);
    const bool a = minimality_test(pi).minimal;
    const bool b = testkit::oracle_minimal(pi);
    disagree += a != b;
    minimal += a;
  }
  line(9, disagree == 0,
       "200 random functions (" + std::to_string(minimal) + " minimal), " + std::to_string(disagree) +
           " disagreements with the sampling oracle");
}

void criterion10() {
  const QNum tiny = QNum::ratio(1, 1000000);
  const auto bad_psi = testkit::mutate_value(psi_function(), 2, tiny);
  const auto bad_kzh = testkit::mutate_value(kzh_function(), 17, tiny);
  const bool a = verify_psi_separation(bad_psi).status == ClaimStatus::refuted;
  const bool b = verify_kzh_claim_slacks(bad_kzh).status == ClaimStatus::refuted;
  const bool c = verify_kzh_perturbation_rank(bad_kzh).status == ClaimStatus::refuted;
  const bool d = verify_lifted(bad_kzh).status == ClaimStatus::refuted;
  auto yn = [](bool v) { return v ? "refuted" : "NOT refuted"; };
  line(10, a && b && c && d,
       std::string("mutated inputs: psi ") + yn(a) + ", kzh-slacks " + yn(b) + ", kzh-rank " + yn(c) +
           ", lifted " + yn(d));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
