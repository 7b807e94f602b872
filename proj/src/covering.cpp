#include "cgf/covering.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace cgf {

namespace {

/// Shift of an open projection so that it starts in [0, 1).
QNum shift_of(const Range& r) { return QNum(Rat(r.lo.floor())); }

OpenInterval reduced(const Range& r) {
  const QNum z = shift_of(r);
  return {r.lo - z, r.hi - z};
}

class UnionFind {
 public:
  std::size_t add() {
    parent_.push_back(parent_.size());
    return parent_.size() - 1;
  }
  std::size_t find(std::size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

struct Labeled {
  OpenInterval iv;
  std::size_t label;
};

class CoverState {
 public:
  explicit CoverState(const ComplexP& P) : P_(P), pieces_(P.size()) {}

  std::size_t piece_of(const OpenInterval& iv) const {
    const std::size_t p = P_.piece_of(iv.lo);
    const QNum end = P_.ext(p + 1);
    if (end < iv.hi) throw std::logic_error("interval crosses a breakpoint");
    return p;
  }

  /// Adds iv and merges overlapping intervals in its piece, and same-label intervals
  /// that touch inside it (pi is continuous there). Returns true if the cover grew.
  bool add(const OpenInterval& iv, std::size_t label) {
    auto& list = pieces_[piece_of(iv)];
    Labeled cur{iv, label};
    bool grew = true;
    for (auto it = list.begin(); it != list.end();) {
      const bool touching = (it->iv.hi == cur.iv.lo || cur.iv.hi == it->iv.lo) &&
                            uf.find(it->label) == uf.find(cur.label);
      if (touching || it->iv.meets(cur.iv.lo, cur.iv.hi)) {
        if (it->iv.lo <= cur.iv.lo && cur.iv.hi <= it->iv.hi) grew = false;
        uf.unite(it->label, cur.label);
        cur.iv = {min(it->iv.lo, cur.iv.lo), max(it->iv.hi, cur.iv.hi)};
        cur.label = uf.find(cur.label);
        it = list.erase(it);
      } else {
        ++it;
      }
    }
    list.push_back(cur);
    return grew;
  }

  /// Re-merges after labels were united. Returns true if anything merged.
  bool normalize() {
    bool merged = false;
    for (auto& list : pieces_) {
      const std::size_t before = list.size();
      std::vector<Labeled> old;
      old.swap(list);
      for (const auto& c : old) add(c.iv, c.label);
      merged = merged || list.size() != before;
    }
    return merged;
  }

  /// Label of a covered interval containing iv.
  std::optional<std::size_t> covering_label(const OpenInterval& iv) {
    for (const auto& c : pieces_[piece_of(iv)]) {
      if (c.iv.lo <= iv.lo && iv.hi <= c.iv.hi) return uf.find(c.label);
    }
    return std::nullopt;
  }

  std::optional<std::size_t> full_piece_label(std::size_t p) {
    const OpenInterval whole{P_.ext(p), P_.ext(p + 1)};
    for (const auto& c : pieces_[p]) {
      if (c.iv == whole) return uf.find(c.label);
    }
    return std::nullopt;
  }

  UnionFind uf;

 private:
  const ComplexP& P_;
  std::vector<std::vector<Labeled>> pieces_;
};

}  // namespace

std::vector<CoveredSeed> directly_covered(const AdditivityReport& report) {
  std::vector<CoveredSeed> out;
  for (std::size_t i : report.faces_of(FaceClass::additive, 2)) {
    const Face2D& F = report.complex[i];
    out.push_back({i, {reduced(F.p1), reduced(F.p2), reduced(F.p3)}});
  }
  return out;
}

std::vector<Move> edge_connections(const AdditivityReport& report) {
  std::vector<Move> out;
  for (std::size_t i : report.faces_of(FaceClass::additive, 1)) {
    const Face2D& F = report.complex[i];
    if (F.p1.is_point()) {
      // pi(a) + pi(y) = pi(a + y): translation from p2 to p3.
      const QNum t = F.p1.lo + shift_of(F.p2) - shift_of(F.p3);
      out.push_back({reduced(F.p2), reduced(F.p3), MoveKind::translation, t, i});
    } else if (F.p2.is_point()) {
      const QNum t = F.p2.lo + shift_of(F.p1) - shift_of(F.p3);
      out.push_back({reduced(F.p1), reduced(F.p3), MoveKind::translation, t, i});
    } else {
      const QNum c = F.p3.lo - shift_of(F.p1) - shift_of(F.p2);
      out.push_back({reduced(F.p1), reduced(F.p2), MoveKind::reflection, c, i});
    }
  }
  // Edges of the other 2-dimensional faces along which Delta pi_F vanishes in the limit.
  const DeltaComplex& dc = report.complex;
  for (std::size_t i = 0; i < dc.size(); ++i) {
    const Face2D& F = dc[i];
    if (F.dim != 2 || report.is_additive(i)) continue;
    const std::size_t n = F.vertices.size();
    for (std::size_t k = 0; k < n; ++k) {
      if (!report.slacks[i][k].is_zero() || !report.slacks[i][(k + 1) % n].is_zero()) continue;
      const Point2& a = F.vertices[k];
      const Point2& b = F.vertices[(k + 1) % n];
      const Range xs{min(a.x, b.x), max(a.x, b.x)};
      const Range ys{min(a.y, b.y), max(a.y, b.y)};
      const Range ss{min(a.x + a.y, b.x + b.y), max(a.x + a.y, b.x + b.y)};
      if (a.y == b.y) {
        out.push_back({reduced(xs), reduced(ss), MoveKind::translation, a.y + shift_of(xs) - shift_of(ss), i});
      } else if (a.x == b.x) {
        out.push_back({reduced(ys), reduced(ss), MoveKind::translation, a.x + shift_of(ys) - shift_of(ss), i});
      } else {
        out.push_back({reduced(xs), reduced(ys), MoveKind::reflection,
                       a.x + a.y - shift_of(xs) - shift_of(ys), i});
      }
    }
  }
  return out;
}

CoveringResult components(const ComplexP& P, const std::vector<CoveredSeed>& seeds,
                          const std::vector<Move>& moves) {
  CoverState st(P);
  for (const auto& s : seeds) {
    const std::size_t label = st.uf.add();
    for (const auto& iv : s.intervals) st.add(iv, label);
  }
  std::vector<bool> fired(moves.size(), false);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t m = 0; m < moves.size(); ++m) {
      const Move& mv = moves[m];
      auto a = st.covering_label(mv.from);
      auto b = st.covering_label(mv.to);
      if (!a && !b) continue;
      if (a && b && st.uf.find(*a) == st.uf.find(*b)) {
        fired[m] = true;
        continue;
      }
      if (a) changed |= st.add(mv.to, *a);
      if (b) changed |= st.add(mv.from, *b);
      if (a && b) {
        st.uf.unite(*a, *b);
        changed = true;
      }
      fired[m] = true;
    }
    changed |= st.normalize();
  }

  CoveringResult res;
  const std::size_t n = P.size();
  res.piece_component.assign(n, -1);
  std::map<std::size_t, int> comp_of_root;
  for (std::size_t p = 0; p < n; ++p) {
    const OpenInterval whole{P.ext(p), P.ext(p + 1)};
    auto label = st.full_piece_label(p);
    if (!label) {
      res.uncovered.push_back(whole);
      continue;
    }
    auto [it, inserted] = comp_of_root.emplace(*label, static_cast<int>(res.components.size()));
    if (inserted) res.components.emplace_back();
    res.piece_component[p] = it->second;
    res.components[it->second].intervals.push_back(whole);
    res.components[it->second].pieces.push_back(p);
  }
  for (std::size_t m = 0; m < moves.size(); ++m) {
    if (!fired[m]) continue;
    auto label = st.covering_label(moves[m].from);
    if (!label) continue;
    auto it = comp_of_root.find(*label);
    if (it != comp_of_root.end()) res.components[it->second].connections.push_back(moves[m]);
  }
  return res;
}

CoveringResult covering(const AdditivityReport& report) {
  return components(report.complex.complex(), directly_covered(report), edge_connections(report));
}

}  // namespace cgf
