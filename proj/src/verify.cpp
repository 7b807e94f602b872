#include "cgf/verify.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "cgf/additivity.hpp"
#include "cgf/covering.hpp"
#include "cgf/perturbation.hpp"

namespace cgf {

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::verified: return "verified";
    case ClaimStatus::refuted: return "refuted";
    case ClaimStatus::skipped: return "skipped";
  }
  return "?";
}

const CheckResult* ClaimReport::check(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

class Suite {
 public:
  explicit Suite(std::string claim) : start_(std::chrono::steady_clock::now()) {
    r_.claim = std::move(claim);
  }

  bool check(std::string name, bool passed, std::string detail = {}) {
    if (!passed && r_.witness.empty()) r_.witness = name + ": " + detail;
    r_.checks.push_back({std::move(name), passed, std::move(detail)});
    return passed;
  }
  void stat(std::string key, std::string value) { r_.stats.emplace_back(std::move(key), std::move(value)); }
  void stat(std::string key, std::size_t value) { stat(std::move(key), std::to_string(value)); }

  ClaimReport finish() {
    bool ok = !r_.checks.empty();
    for (const auto& c : r_.checks) ok = ok && c.passed;
    r_.status = ok ? ClaimStatus::verified : ClaimStatus::refuted;
    r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return r_;
  }

 private:
  ClaimReport r_;
  std::chrono::steady_clock::time_point start_;
};

std::string point_str(const Point2& p) {
  return "(" + format_qnum(p.x) + ", " + format_qnum(p.y) + ")";
}

bool minimal_precondition(Suite& s, const std::string& name, const PwlFunction& pi, Exec exec) {
  const auto m = minimality_test(pi, exec);
  std::string detail = m.minimal ? "minimal" : m.condition + ": " + m.detail;
  return s.check("minimal(" + name + ")", m.minimal, detail);
}

}  // namespace

ClaimReport verify_psi_separation(const PwlFunction& psi, const PwlFunction& psi_prime, Exec exec) {
  Suite s("psi");
  const bool a = minimal_precondition(s, "psi", psi, exec);
  const bool b = minimal_precondition(s, "psi_prime", psi_prime, exec);
  if (!a || !b) return s.finish();

  const auto cont = e_containment(psi, psi_prime, exec);
  s.check("E(psi) strict subset of E(psi_prime)", cont.relation == Containment::strict_subset,
          to_string(cont.relation) + (cont.only_second ? ", witness " + cont.only_second_label : ""));

  const ComplexP P(merge_breakpoints(psi.complex().breakpoints(), psi_prime.complex().breakpoints()));
  const DeltaComplex dc = delta_p(P, exec);
  const QNum c = QNum::ratio(3, 8);
  const QNum step = QNum::ratio(1, 64);
  const Face2D& ne = dc[dc.face_of_point(c + step, c + step)];
  const Point2 v{c, c};
  if (ne.contains(v)) {
    const QNum s1 = slack_at(psi, P, ne, v);
    const QNum s2 = slack_at(psi_prime, P, ne, v);
    s.check("northeast limit at (3/8,3/8)", s1.is_zero() && s2.sign() > 0,
            dc.label(ne) + ": psi " + format_qnum(s1) + ", psi_prime " + format_qnum(s2));
  } else {
    s.check("northeast limit at (3/8,3/8)", false, "(3/8,3/8) is not a vertex of " + dc.label(ne));
  }

  // psi_bar = psi' - psi must vanish wherever Delta psi_F does to be a perturbation.
  const PwlFunction bar = linear_combination(QNum(1), psi_prime, QNum(-1), psi);
  const auto sp = slack_sweep(psi, dc, exec);
  const auto sb = slack_sweep(bar, dc, exec);
  std::string outside;
  for (std::size_t i = 0; i < dc.size() && outside.empty(); ++i) {
    for (std::size_t k = 0; k < sp[i].size(); ++k) {
      if (sp[i][k].is_zero() && !sb[i][k].is_zero()) {
        outside = dc.label(dc[i]) + " at " + point_str(dc[i].vertices[k]) + ": " +
                  format_qnum(sb[i][k]);
        break;
      }
    }
  }
  s.check("psi_prime - psi outside the perturbation space of psi", !outside.empty(), outside);

  const auto report = additive_face_report(psi, exec);
  const auto cov = covering(report);
  const PerturbationModel model(psi, cov, true);
  const auto sys = build_system(report, model, zero_slack_selection(report, cov, false), false);
  const auto e = eliminate(sys);
  s.check("psi extremality certificate", cov.uncovered.empty() && e.nullity == 0,
          std::to_string(cov.components.size()) + " components, " +
              std::to_string(cov.uncovered.size()) + " uncovered, rank " + std::to_string(e.rank) +
              " of " + std::to_string(sys.cols()));
  s.stat("faces", dc.size());
  s.stat("equations", sys.rows.size());
  return s.finish();
}

ClaimReport verify_kzh_claim_slacks(const PwlFunction& pi, Exec exec) {
  Suite s("kzh-slacks");
  if (!minimal_precondition(s, "kzh", pi, exec)) return s.finish();
  const QNum sv = kzh_s_from_table(pi);
  s.check("s from Eq. 13", sv == kzh_params().s, format_qnum(sv));

  const DeltaComplex dc = delta_p(pi.complex(), exec);
  const auto slacks = slack_sweep(pi, dc, exec);
  const auto& special = pi.special_intervals();
  std::size_t with_nf = 0, type_a = 0, type_b = 0, tight = 0, nf3 = 0;
  std::string dichotomy, tight_bad, small;
  std::optional<QNum> min_other;
  const QNum three_s = QNum(3) * sv;
  for (std::size_t i = 0; i < dc.size(); ++i) {
    const Face2D& F = dc[i];
    const int nf = n_f(F, special);
    if (nf == 0) continue;
    ++with_nf;
    if (nf == 3) ++nf3;
    const QNum bound = QNum(nf) * sv;
    bool all_zero = true, all_ge = true, some_gt = false;
    for (const auto& v : slacks[i]) {
      if (!v.is_zero()) all_zero = false;
      if (v < bound) all_ge = false;
      if (bound < v) some_gt = true;
    }
    if (all_zero) {
      ++type_a;
      continue;
    }
    if (all_ge && some_gt) {
      ++type_b;
    } else if (dichotomy.empty()) {
      dichotomy = dc.label(F) + " n_F=" + std::to_string(nf);
    }
    for (std::size_t k = 0; k < slacks[i].size(); ++k) {
      const QNum& v = slacks[i][k];
      if (v == bound) {
        ++tight;
        if (nf != 1 && tight_bad.empty()) tight_bad = dc.label(F) + " at " + point_str(F.vertices[k]);
      } else if (!v.is_zero()) {
        if (!min_other || v < *min_other) min_other = v;
        if (v < three_s && small.empty()) {
          small = dc.label(F) + " at " + point_str(F.vertices[k]) + ": " + format_qnum(v);
        }
      }
    }
  }
  s.check("dichotomy (a)/(b)", dichotomy.empty(), dichotomy);
  s.check("no face with n_F = 3", nf3 == 0, std::to_string(nf3) + " faces");
  s.check("tight vertices only on n_F = 1 faces", tight_bad.empty(), tight_bad);
  s.check("non-tight slacks >= 3s", small.empty(), small);
  s.stat("faces", dc.size());
  s.stat("faces with n_F > 0", with_nf);
  s.stat("type (a)", type_a);
  s.stat("type (b)", type_b);
  s.stat("tight vertices", tight);
  if (min_other) s.stat("smallest non-tight slack", format_qnum(*min_other));
  return s.finish();
}

ClaimReport verify_kzh_perturbation_rank(const PwlFunction& pi, Exec exec) {
  Suite s("kzh-rank");
  if (!minimal_precondition(s, "kzh", pi, exec)) return s.finish();
  const auto report = additive_face_report(pi, exec);
  const auto cov = covering(report);
  s.check("two slope components", cov.components.size() == 2,
          std::to_string(cov.components.size()) + " components");
  s.check("uncovered = special intervals", cov.uncovered == pi.special_intervals(),
          std::to_string(cov.uncovered.size()) + " uncovered intervals");
  if (cov.components.size() != 2 || cov.uncovered != pi.special_intervals()) return s.finish();

  const PerturbationModel model(pi, cov, true);
  s.check("39 variables", model.vars().size() == 39, std::to_string(model.vars().size()));

  const DeltaComplex& dc = report.complex;
  const ComplexP& P = dc.complex();
  std::vector<std::pair<std::size_t, Point2>> selection;
  std::string bad;
  for (const auto& row : kzh_claim_i_selection()) {
    auto idx = dc.find(row.I, row.J, row.K);
    const Face2D* F = idx ? &dc[*idx] : nullptr;
    const bool vertex_ok =
        F && std::find(F->vertices.begin(), F->vertices.end(), row.vertex) != F->vertices.end();
    if (!vertex_ok) {
      if (bad.empty()) {
        bad = "F(" + P.label(row.I) + ", " + P.label(row.J) + ", " + P.label(row.K) + ") at " +
              point_str(row.vertex);
      }
      continue;
    }
    if (!report.is_additive(*idx)) {
      if (bad.empty()) bad = dc.label(*F) + " is not additive";
      continue;
    }
    selection.emplace_back(*idx, row.vertex);
  }
  s.check("selected faces are additive faces of Delta P", bad.empty(), bad);
  if (!bad.empty()) return s.finish();

  const LinearSystem sys = build_system(report, model, selection);
  const auto e = eliminate(sys);
  s.check("rank 39", e.rank == 39 && e.nullity == 0,
          "rank " + std::to_string(e.rank) + ", nullity " + std::to_string(e.nullity));

  std::string drop;
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    LinearSystem smaller = sys;
    smaller.rows.erase(smaller.rows.begin() + static_cast<long>(r));
    const std::size_t rk = rank(smaller);
    if (rk != 38 && drop.empty()) drop = "row " + std::to_string(r + 1) + ": rank " + std::to_string(rk);
  }
  s.check("every equation is needed", drop.empty(), drop);

  const auto all = build_system(report, model, zero_slack_selection(report, cov, true));
  const auto e_all = eliminate(all);
  s.check("all additive faces: rank 39", e_all.rank == 39,
          std::to_string(all.rows.size()) + " equations, rank " + std::to_string(e_all.rank));

  const PerturbationModel free_model(pi, cov, false);
  const auto alt = build_system(report, free_model, zero_slack_selection(report, cov, true));
  const auto e_alt = eliminate(alt);
  s.check("without symmetry elimination: nullity 0", e_alt.nullity == 0,
          std::to_string(alt.cols()) + " variables, rank " + std::to_string(e_alt.rank));
  s.stat("equations (all additive)", all.rows.size());
  s.stat("variables (no symmetry)", alt.cols());
  return s.finish();
}

namespace {

struct Window {
  QNum lo;
  QNum hi;
  QNum shift;
  bool mirrored;
};

/// Part of the open coordinate range (a, b) inside a special interval (mod 1).
std::optional<Window> special_window(const QNum& a, const QNum& b) {
  const KzhParams& k = kzh_params();
  std::optional<Window> best;
  const QNum z0(Rat(a.floor()));
  for (const QNum& z : {z0 - QNum(1), z0, z0 + QNum(1)}) {
    for (bool mirrored : {false, true}) {
      const QNum lo = mirrored ? k.f - k.u + z : k.l + z;
      const QNum hi = mirrored ? k.f - k.l + z : k.u + z;
      const QNum wlo = max(a, lo);
      const QNum whi = min(b, hi);
      if (!(wlo < whi)) continue;
      if (!best || best->hi - best->lo < whi - wlo) best = Window{wlo, whi, z, mirrored};
    }
  }
  return best;
}

/// Values v in (vlo, vhi) of the coset base + T, found along increasing |lambda1|.
std::vector<QNum> coset_points(const QNum& base, const QNum& vlo, const QNum& vhi, std::size_t count) {
  const KzhParams& k = kzh_params();
  const double t1 = k.t1.to_double();
  const double t2 = k.t2.to_double();
  const double b = base.to_double();
  const double lo = vlo.to_double();
  const double hi = vhi.to_double();
  std::vector<QNum> out;
  for (long n = 0; n < 4000000 && out.size() < count; ++n) {
    const long l1 = (n % 2 == 0) ? n / 2 : -(n + 1) / 2;
    const double off = b + static_cast<double>(l1) * t1;
    const double l2lo = std::ceil((lo - off) / t2) - 1;
    const double l2hi = std::floor((hi - off) / t2) + 1;
    for (double l2 = l2lo; l2 <= l2hi && out.size() < count; l2 += 1) {
      const double approx = off + l2 * t2;
      if (approx < lo - 1e-9 || approx > hi + 1e-9) continue;
      const QNum v = base + QNum(l1) * k.t1 + QNum(static_cast<long>(l2)) * k.t2;
      if (vlo < v && v < vhi) out.push_back(v);
    }
  }
  return out;
}

Point2 point_on_face(const ComplexP& P, const Face2D& F, int coord, const QNum& w) {
  auto c = [coord](const Point2& p) {
    return coord == 0 ? p.x : (coord == 1 ? p.y : p.x + p.y);
  };
  if (F.dim == 1) {
    const Point2& a = F.vertices[0];
    const Point2& b = F.vertices[1];
    const QNum t = (w - c(a)) / (c(b) - c(a));
    return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
  }
  const QNum two(2);
  if (coord == 0) {
    const QNum lo = max(P.lo(F.J), P.lo(F.K) - w);
    const QNum hi = min(P.hi(F.J), P.hi(F.K) - w);
    return {w, (lo + hi) / two};
  }
  if (coord == 1) {
    const QNum lo = max(P.lo(F.I), P.lo(F.K) - w);
    const QNum hi = min(P.hi(F.I), P.hi(F.K) - w);
    return {(lo + hi) / two, w};
  }
  const QNum lo = max(P.lo(F.I), w - P.hi(F.J));
  const QNum hi = min(P.hi(F.I), w - P.lo(F.J));
  const QNum x = (lo + hi) / two;
  return {x, w - x};
}

Point2 centroid(const Face2D& F) {
  QNum x, y;
  for (const auto& v : F.vertices) {
    x += v.x;
    y += v.y;
  }
  const QNum n(static_cast<long>(F.vertices.size()));
  return {x / n, y / n};
}

struct FaceOutcome {
  std::size_t counts[3] = {0, 0, 0};
  std::size_t samples = 0;
  bool stratified = false;
  bool sampled_zero = false;
  bool sampled_positive = false;
  bool bound_attained = false;
  std::string failure;
};

}  // namespace

ClaimReport verify_lifted(const PwlFunction& pi, LiftedSampling opts, Exec exec) {
  Suite s("lifted");
  if (!minimal_precondition(s, "kzh", pi, exec)) return s.finish();
  const KzhParams& k = kzh_params();
  const QNum sv = kzh_s_from_table(pi);
  const LiftedFunction lifted(pi, sv);
  const auto report = additive_face_report(pi, exec);
  const DeltaComplex& dc = report.complex;
  const ComplexP& P = dc.complex();
  const auto& special = pi.special_intervals();

  // Coset bases for the three classes.
  const auto fixed = fixed_coset_representatives();
  const QNum g = fixed[0] + k.t1 / QNum(3);
  const bool g_plus = coset_classify(g).cls == CosetClass::plus_Cplus;
  const QNum plus_base = g_plus ? g : k.l + k.u - g;
  const QNum minus_base = g_plus ? k.l + k.u - g : g;

  std::vector<FaceOutcome> out(dc.size());
  const long m = static_cast<long>(dc.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (long i = 0; i < m; ++i) {
    const Face2D& F = dc[i];
    FaceOutcome& o = out[i];
    const int nf = n_f(F, special);
    const bool additive = report.is_additive(i);
    auto fail = [&o](std::string msg) {
      if (o.failure.empty()) o.failure = std::move(msg);
    };
    auto examine = [&](const Point2& p) {
      ++o.samples;
      if (!F.relint_contains(p)) {
        fail("sample " + point_str(p) + " not in relint");
        return;
      }
      const QNum coords[3] = {p.x, p.y, p.x + p.y};
      QNum base[3], hat[3];
      for (int c = 0; c < 3; ++c) {
        base[c] = pi.eval(coords[c]);
        hat[c] = lifted.eval(coords[c]);
        const QNum d = hat[c] - base[c];
        if (sv < d.abs()) fail("|lift - pi| > s at " + format_qnum(coords[c]));
        if (d.abs() == sv) o.bound_attained = true;
        if (hat[c] + lifted.eval(k.f - coords[c]) != QNum(1)) {
          fail("symmetry fails at " + format_qnum(coords[c]));
        }
      }
      const QNum dpi = base[0] + base[1] - base[2];
      const QNum dhat = hat[0] + hat[1] - hat[2];
      const QNum dbar = dhat - dpi;
      if (dhat.is_zero()) o.sampled_zero = true;
      if (dhat.sign() > 0) o.sampled_positive = true;
      if (nf == 0 && dhat != dpi) fail("lift differs from pi at " + point_str(p));
      if (nf > 0 && additive && !dhat.is_zero()) fail("Delta lift nonzero at " + point_str(p));
      if (nf > 0 && !additive) {
        const QNum bound = QNum(nf) * sv;
        if (!(bound < dpi) || bound < dbar.abs() || dhat.sign() <= 0) {
          fail("slack bound fails at " + point_str(p));
        }
      }
    };

    if (nf == 0 || F.dim == 0) {
      examine(F.dim == 0 ? F.vertices[0] : centroid(F));
      continue;
    }
    int coord = -1;
    std::optional<Window> win;
    const Range* ranges[3] = {&F.p1, &F.p2, &F.p3};
    for (int c = 0; c < 3 && !win; ++c) {
      if (ranges[c]->is_point()) continue;
      win = special_window(ranges[c]->lo, ranges[c]->hi);
      if (win) coord = c;
    }
    if (!win) {
      examine(centroid(F));
      continue;
    }
    o.stratified = true;
    // v is the coordinate pulled back into (l, u).
    const QNum vlo = win->mirrored ? k.f - (win->hi - win->shift) : win->lo - win->shift;
    const QNum vhi = win->mirrored ? k.f - (win->lo - win->shift) : win->hi - win->shift;
    for (int cls = 0; cls < 3; ++cls) {
      std::vector<QNum> vs;
      if (cls == 0) {
        for (std::size_t r = 0; r < fixed.size() && vs.size() < opts.per_class; ++r) {
          auto part = coset_points(fixed[r], vlo, vhi, (opts.per_class + 3) / 4);
          vs.insert(vs.end(), part.begin(), part.end());
        }
        if (vs.size() < opts.per_class) {
          auto more = coset_points(fixed[0], vlo, vhi, opts.per_class);
          for (auto& v : more) {
            if (vs.size() >= opts.per_class) break;
            if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
          }
        }
      } else {
        vs = coset_points(cls == 1 ? plus_base : minus_base, vlo, vhi, opts.per_class);
      }
      for (const auto& v : vs) {
        const CosetClass got = coset_classify(v).cls;
        const CosetClass want = cls == 0 ? CosetClass::fixed_C
                                         : (cls == 1 ? CosetClass::plus_Cplus : CosetClass::minus);
        if (got != want) {
          fail("sampler produced the wrong class");
          continue;
        }
        const QNum w = win->mirrored ? k.f - v + win->shift : v + win->shift;
        examine(point_on_face(P, F, coord, w));
        ++o.counts[cls];
      }
    }
  }

  std::size_t samples = 0, stratified = 0, unstratified = 0, additive_nf = 0;
  std::string failure, coverage, e_mismatch;
  bool attained = false;
  for (std::size_t i = 0; i < dc.size(); ++i) {
    const FaceOutcome& o = out[i];
    samples += o.samples;
    attained = attained || o.bound_attained;
    if (!o.failure.empty() && failure.empty()) failure = dc.label(dc[i]) + ": " + o.failure;
    const int nf = n_f(dc[i], special);
    if (nf > 0 && report.is_additive(i)) ++additive_nf;
    if (nf > 0 && dc[i].dim > 0) {
      if (o.stratified) {
        ++stratified;
        for (std::size_t c : o.counts) {
          if (c < opts.per_class && coverage.empty()) {
            coverage = dc.label(dc[i]) + ": " + std::to_string(c) + " points in a class";
          }
        }
      } else {
        ++unstratified;
      }
    }
    // Face-level additivity of the lift matches that of pi.
    const bool lift_additive = o.sampled_zero && !o.sampled_positive;
    if (lift_additive != report.is_additive(i) && e_mismatch.empty()) e_mismatch = dc.label(dc[i]);
  }
  s.check("Delta lift on all faces", failure.empty(), failure);
  s.check("sampler coverage", coverage.empty(), coverage);
  s.check("|lift - pi| = s attained", attained, attained ? "" : "never attained");
  s.check("E(lift) = E(pi) on faces", e_mismatch.empty(), e_mismatch);
  s.stat("faces", dc.size());
  s.stat("stratified faces", stratified);
  s.stat("unstratified faces", unstratified);
  s.stat("additive faces with n_F > 0", additive_nf);
  s.stat("samples", samples);
  return s.finish();
}

std::vector<ClaimReport> verify_all(Exec exec) {
  return {verify_psi_separation(psi_function(), psi_prime_function(), exec),
          verify_kzh_claim_slacks(kzh_function(), exec),
          verify_kzh_perturbation_rank(kzh_function(), exec),
          verify_lifted(kzh_function(), {}, exec)};
}

std::string format_report(const ClaimReport& r) {
  std::ostringstream os;
  os << r.claim << ": " << to_string(r.status) << "\n";
  for (const auto& c : r.checks) {
    os << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
  for (const auto& [key, value] : r.stats) os << "  " << key << ": " << value << "\n";
  if (!r.witness.empty()) os << "  witness: " << r.witness << "\n";
  return os.str();
}

std::string report_json(const ClaimReport& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["claim"] = r.claim;
  j["status"] = to_string(r.status);
  j["witness"] = r.witness;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  nlohmann::ordered_json stats = nlohmann::ordered_json::object();
  for (const auto& [key, value] : r.stats) stats[key] = value;
  j["stats"] = stats;
  return j.dump(2);
}

}  // namespace cgf
