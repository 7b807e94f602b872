#include "cgf/additivity.hpp"

#include <stdexcept>

namespace cgf {

QNum slack_at(const PwlFunction& pi, const ComplexP& P, const Face2D& F, const Point2& v) {
  if (!F.contains(v)) throw std::invalid_argument("vertex is not in the face");
  const QNum s = v.x + v.y;
  return pi.face_limit(P.lo(F.I), P.hi(F.I), v.x) + pi.face_limit(P.lo(F.J), P.hi(F.J), v.y) -
         pi.face_limit(P.lo(F.K), P.hi(F.K), s);
}

std::vector<QNum> vertex_slacks(const PwlFunction& pi, const ComplexP& P, const Face2D& F) {
  std::vector<QNum> out;
  out.reserve(F.vertices.size());
  for (const auto& v : F.vertices) out.push_back(slack_at(pi, P, F, v));
  return out;
}

std::vector<std::vector<QNum>> slack_sweep(const PwlFunction& pi, const DeltaComplex& dc,
                                           Exec exec) {
  const long m = static_cast<long>(dc.size());
  std::vector<std::vector<QNum>> out(dc.size());
#pragma omp parallel for schedule(dynamic, 16) if (exec == Exec::parallel)
  for (long i = 0; i < m; ++i) out[i] = vertex_slacks(pi, dc.complex(), dc[i]);
  return out;
}

std::string to_string(FaceClass c) {
  switch (c) {
    case FaceClass::additive: return "additive";
    case FaceClass::limit_additive: return "limit_additive";
    case FaceClass::non_additive: return "non_additive";
  }
  return "?";
}

std::vector<std::size_t> AdditivityReport::faces_of(FaceClass c, int dim) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i] == c && (dim < 0 || complex[i].dim == dim)) out.push_back(i);
  }
  return out;
}

namespace {

FaceClass classify(const std::vector<QNum>& slacks) {
  std::size_t zeros = 0;
  for (const auto& s : slacks) zeros += s.is_zero() ? 1 : 0;
  if (zeros == slacks.size()) return FaceClass::additive;
  return zeros > 0 ? FaceClass::limit_additive : FaceClass::non_additive;
}

}  // namespace

AdditivityReport additive_face_report(const PwlFunction& pi, Exec exec) {
  return additive_face_report(pi, delta_p(pi.complex(), exec), exec);
}

AdditivityReport additive_face_report(const PwlFunction& pi, const DeltaComplex& dc, Exec exec) {
  AdditivityReport r{dc, {}, slack_sweep(pi, dc, exec)};
  r.classes.reserve(dc.size());
  for (const auto& s : r.slacks) r.classes.push_back(classify(s));
  return r;
}

MinimalityResult minimality_test(const PwlFunction& pi, Exec exec) {
  return minimality_test(pi, pi.f(), exec);
}

MinimalityResult minimality_test(const PwlFunction& pi, const QNum& f, Exec exec) {
  MinimalityResult res;
  const QNum zero(0);
  const QNum one(1);
  if (!pi.eval(zero).is_zero()) {
    res.condition = "pi(0)=0";
    res.detail = "pi(0) = " + format_qnum(pi.eval(zero));
    res.witness = Point2{zero, zero};
    return res;
  }
  for (const auto& row : pi.rows()) {
    const QNum& b = row.x;
    const QNum c = f - b;
    const QNum sums[3] = {pi.limit(b, Side::minus) + pi.limit(c, Side::plus), pi.eval(b) + pi.eval(c),
                          pi.limit(b, Side::plus) + pi.limit(c, Side::minus)};
    for (int k = 0; k < 3; ++k) {
      if (sums[k] != one) {
        static const char* sides[3] = {"x-", "x", "x+"};
        res.condition = "symmetry";
        res.detail = std::string("pi(") + sides[k] + ") + pi(f - " + sides[k] + ") = " +
                     format_qnum(sums[k]) + " at x = " + format_qnum(b);
        res.witness = Point2{b, c.frac()};
        return res;
      }
    }
  }
  for (const auto& row : pi.rows()) {
    for (const QNum* v : {&row.left, &row.value, &row.right}) {
      if (v->sign() < 0 || one < *v) {
        res.condition = "bounds";
        res.detail = "value " + format_qnum(*v) + " at x = " + format_qnum(row.x);
        res.witness = Point2{row.x, *v};
        return res;
      }
    }
  }
  const DeltaComplex dc = delta_p(pi.complex(), exec);
  const auto slacks = slack_sweep(pi, dc, exec);
  for (std::size_t i = 0; i < dc.size(); ++i) {
    for (std::size_t k = 0; k < slacks[i].size(); ++k) {
      if (slacks[i][k].sign() < 0) {
        res.condition = "subadditivity";
        res.detail = "slack " + format_qnum(slacks[i][k]) + " on " + dc.label(dc[i]);
        res.witness = dc[i].vertices[k];
        res.face = dc[i];
        return res;
      }
    }
  }
  res.minimal = true;
  return res;
}

std::string to_string(Containment c) {
  switch (c) {
    case Containment::equal: return "equal";
    case Containment::strict_subset: return "strict_subset";
    case Containment::strict_superset: return "strict_superset";
    case Containment::incomparable: return "incomparable";
  }
  return "?";
}

ContainmentResult e_containment(const PwlFunction& pi1, const PwlFunction& pi2, Exec exec) {
  const auto xs = merge_breakpoints(pi1.complex().breakpoints(), pi2.complex().breakpoints());
  const ComplexP P(xs);
  const DeltaComplex dc = delta_p(P, exec);
  const auto r1 = additive_face_report(pi1, dc, exec);
  const auto r2 = additive_face_report(pi2, dc, exec);
  ContainmentResult res;
  for (std::size_t i = 0; i < dc.size(); ++i) {
    const bool a = r1.is_additive(i);
    const bool b = r2.is_additive(i);
    if (b && !a && !res.only_second) {
      res.only_second = dc[i];
      res.only_second_label = dc.label(dc[i]);
    }
    if (a && !b && !res.only_first) {
      res.only_first = dc[i];
      res.only_first_label = dc.label(dc[i]);
    }
  }
  if (res.only_first && res.only_second) {
    res.relation = Containment::incomparable;
  } else if (res.only_second) {
    res.relation = Containment::strict_subset;
  } else if (res.only_first) {
    res.relation = Containment::strict_superset;
  }
  return res;
}

}  // namespace cgf
