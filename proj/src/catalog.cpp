#include "cgf/catalog.hpp"

#include <stdexcept>

#include "cgf/additivity.hpp"

namespace cgf {

namespace {

QNum q(const char* text) { return parse_qnum(text); }

}  // namespace

const KzhParams& kzh_params() {
  static const KzhParams p = [] {
    KzhParams k;
    k.f = q("4/5");
    k.l = q("219/800");
    k.u = q("269/800");
    k.t1 = q("77/7752*sqrt2");
    k.t2 = q("77/2584");
    k.a0 = q("19/100");
    k.a1 = k.a0 + k.t1;
    k.a2 = q("14199/64600");
    k.c1 = q("35/13");
    k.c2 = q("5/11999");
    k.c3 = q("-5");
    k.s = q("19/23998");
    return k;
  }();
  return p;
}

const std::vector<TableRow>& kzh_table() {
  static const std::vector<TableRow> rows = {
      {"0", "101/650", "0", "101/650", "c3"},
      {"101/5000", "707/13000", "2727/13000", "707/13000", "c1"},
      {"60153/369200", "", "421071/959920", "", "c3"},
      {"849/5000", "4851099/11999000", "-1925/71994*sqrt2 + 4851099/11999000", "4851099/11999000", "c1"},
      {"1925/298129*sqrt2 + 849/5000", "", "67375/3875677*sqrt2 + 4851099/11999000", "", "c3"},
      {"77/7752*sqrt2 + 849/5000", "385/93016248*sqrt2 + 4851099/11999000",
       "2695/100776*sqrt2 + 4851099/11999000", "385/93016248*sqrt2 + 4851099/11999000", "c1"},
      {"19/100", "-1925/71994*sqrt2 + 275183/599950", "18196/59995",
       "-1925/71994*sqrt2 + 275183/599950", "c1"},
      {"77/22152*sqrt2 + 281986521/1490645000", "", "-385/22152*sqrt2 + 10467633/22933000", "", "c3"},
      {"40294/201875", "848837/2099500", "795836841/1937838500", "848837/2099500", "c1"},
      {"36999/184600", "", "975607/2399800", "", "c3"},
      {"77/7752*sqrt2 + 19/100", "-385/7752*sqrt2 + 275183/599950",
       "385/93016248*sqrt2 + 18196/59995", "-385/7752*sqrt2 + 275183/599950", "c3"},
      {"1051/5000", "4291761/11999000", "-1925/71994*sqrt2 + 4291761/11999000", "4291761/11999000", "c1"},
      {"1925/298129*sqrt2 + 1051/5000", "", "67375/3875677*sqrt2 + 4291761/11999000", "", "c3"},
      {"14199/64600", "192500/3875677*sqrt2 + 240046061/775135400", "50943/167960",
       "192500/3875677*sqrt2 + 240046061/775135400", "c3"},
      {"77/7752*sqrt2 + 1051/5000", "385/93016248*sqrt2 + 4291761/11999000",
       "2695/100776*sqrt2 + 4291761/11999000", "385/93016248*sqrt2 + 4291761/11999000", "c1"},
      {"77/22152*sqrt2 + 342208579/1490645000", "", "-385/22152*sqrt2 + 122181831/298129000", "", "c3"},
      {"193799/807500", "", "187742/524875", "", "c1"},
      {"219/800", "", "933/2080", "51443/147680", "c2"},
      {"269/800", "668809/1919840", "683/2080", "", "c1"},
      {"371/800", "", "1397/2080", "1251031/1919840", "c2"},
      {"421/800", "96237/147680", "1147/2080", "", "c1"},
      {"452201/807500", "", "337133/524875", "", "c3"},
      {"-77/22152*sqrt2 + 850307421/1490645000", "", "385/22152*sqrt2 + 175947169/298129000", "", "c1"},
      {"-77/7752*sqrt2 + 2949/5000", "-385/93016248*sqrt2 + 7707239/11999000",
       "-2695/100776*sqrt2 + 7707239/11999000", "-385/93016248*sqrt2 + 7707239/11999000", "c3"},
      {"37481/64600", "-192500/3875677*sqrt2 + 535089339/775135400", "117017/167960",
       "-192500/3875677*sqrt2 + 535089339/775135400", "c3"},
      {"-1925/298129*sqrt2 + 2949/5000", "", "-67375/3875677*sqrt2 + 7707239/11999000", "", "c1"},
      {"2949/5000", "7707239/11999000", "1925/71994*sqrt2 + 7707239/11999000", "7707239/11999000", "c3"},
      {"-77/7752*sqrt2 + 61/100", "385/7752*sqrt2 + 324767/599950",
       "-385/93016248*sqrt2 + 41799/59995", "385/7752*sqrt2 + 324767/599950", "c3"},
      {"110681/184600", "", "1424193/2399800", "", "c1"},
      {"121206/201875", "1250663/2099500", "1142001659/1937838500", "1250663/2099500", "c3"},
      {"-77/22152*sqrt2 + 910529479/1490645000", "", "385/22152*sqrt2 + 12465367/22933000", "", "c1"},
      {"61/100", "1925/71994*sqrt2 + 324767/599950", "41799/59995", "1925/71994*sqrt2 + 324767/599950",
       "c1"},
      {"-77/7752*sqrt2 + 3151/5000", "-385/93016248*sqrt2 + 7147901/11999000",
       "-2695/100776*sqrt2 + 7147901/11999000", "-385/93016248*sqrt2 + 7147901/11999000", "c3"},
      {"-1925/298129*sqrt2 + 3151/5000", "", "-67375/3875677*sqrt2 + 7147901/11999000", "", "c1"},
      {"3151/5000", "7147901/11999000", "1925/71994*sqrt2 + 7147901/11999000", "7147901/11999000", "c3"},
      {"235207/369200", "", "538849/959920", "", "c1"},
      {"3899/5000", "12293/13000", "10273/13000", "12293/13000", "c3"},
      {"4/5", "549/650", "1", "549/650", "c1"},
      {"4101/5000", "899/1000", "9667/13000", "899/1000", "c3"},
      {"4899/5000", "101/1000", "3333/13000", "101/1000", "c1"},
  };
  return rows;
}

const PwlFunction& kzh_function() {
  static const PwlFunction pi = [] {
    const KzhParams& k = kzh_params();
    std::vector<BreakpointRow> rows;
    for (const auto& r : kzh_table()) {
      const QNum value = q(r.value);
      rows.push_back({q(r.x), *r.left ? q(r.left) : value, value, *r.right ? q(r.right) : value});
    }
    const std::vector<OpenInterval> special = {{k.l, k.u}, {k.f - k.u, k.f - k.l}};
    auto p = PwlFunction::from_rows(std::move(rows), k.f, special, "kzh");
    const auto& table = kzh_table();
    for (std::size_t i = 0; i < table.size(); ++i) {
      const std::string c = table[i].slope;
      const QNum& want = c == "c1" ? k.c1 : (c == "c2" ? k.c2 : k.c3);
      if (p.slope(i) != want) {
        throw std::logic_error("table slope mismatch on piece " + std::to_string(i));
      }
    }
    return p;
  }();
  return pi;
}

namespace {

PwlFunction build_psi() {
  auto r = [](const char* x, const char* l, const char* v, const char* rt) {
    return BreakpointRow{q(x), q(l), q(v), q(rt)};
  };
  return PwlFunction::from_rows({r("0", "1/2", "0", "0"), r("1/8", "3/4", "1/4", "1/4"),
                                 r("3/8", "3/4", "3/4", "1/4"), r("1/2", "1", "1", "1/2"),
                                 r("5/8", "3/4", "3/4", "3/4"), r("7/8", "1/4", "1/4", "1/4")},
                                q("1/2"), {}, "psi");
}

PwlFunction build_psi_prime() {
  auto r = [](const char* x, const char* l, const char* v, const char* rt) {
    return BreakpointRow{q(x), q(l), q(v), q(rt)};
  };
  return PwlFunction::from_rows({r("0", "1/2", "0", "0"), r("1/8", "1/4", "1/4", "1/4"),
                                 r("3/8", "3/4", "3/4", "3/4"), r("1/2", "1", "1", "1/2"),
                                 r("5/8", "3/4", "3/4", "3/4"), r("7/8", "1/4", "1/4", "1/4")},
                                q("1/2"), {}, "psi_prime");
}

}  // namespace

const PwlFunction& psi_function() {
  static const PwlFunction psi = [] {
    auto p = build_psi();
    if (!minimality_test(p, Exec::serial).minimal) throw std::logic_error("psi is not minimal");
    if (p.slope(0) != QNum(6) || p.eval(q("1/8")) != q("1/4")) {
      throw std::logic_error("psi does not match its defining data");
    }
    return p;
  }();
  return psi;
}

const PwlFunction& psi_prime_function() {
  static const PwlFunction psi_prime = [] {
    auto p = build_psi_prime();
    if (!minimality_test(p, Exec::serial).minimal) throw std::logic_error("psi' is not minimal");
    return p;
  }();
  return psi_prime;
}

QNum kzh_s_from_table(const PwlFunction& pi) {
  const KzhParams& k = kzh_params();
  const QNum x39 = pi.breakpoint(39);
  return pi.limit(x39, Side::minus) + pi.eval(QNum(1) + k.l - x39) - pi.eval(k.l);
}

namespace {

const Rat& t1_coeff() {
  static const Rat r(77, 7752);
  return r;
}

const Rat& t2_value() {
  static const Rat r(77, 2584);
  return r;
}

}  // namespace

bool in_group_T(const QNum& x) {
  return is_integer(Rat(x.rational_part() / t2_value())) &&
         is_integer(Rat(x.sqrt2_part() / t1_coeff()));
}

std::string to_string(CosetClass c) {
  switch (c) {
    case CosetClass::fixed_C: return "C";
    case CosetClass::plus_Cplus: return "C+";
    case CosetClass::minus: return "minus";
  }
  return "?";
}

std::pair<Rat, Rat> reduced_pair(const QNum& x) {
  return {mod_rat(x.rational_part(), t2_value()), mod_rat(x.sqrt2_part(), t1_coeff())};
}

std::vector<QNum> fixed_coset_representatives() {
  const KzhParams& k = kzh_params();
  const QNum m = k.l + k.u;
  const QNum two(2);
  return {m / two, (m - k.t1) / two, (m - k.t2) / two, (m - k.t1 - k.t2) / two};
}

CosetProfile coset_classify(const QNum& x) {
  const KzhParams& k = kzh_params();
  static const std::vector<std::pair<Rat, Rat>> fixed = [] {
    std::vector<std::pair<Rat, Rat>> out;
    for (const auto& c : fixed_coset_representatives()) out.push_back(reduced_pair(c));
    return out;
  }();
  const auto [a, b] = reduced_pair(x);
  for (const auto& c : fixed) {
    if (c.first == a && c.second == b) return {a, b, CosetClass::fixed_C};
  }
  const auto mirror = reduced_pair(k.l + k.u - x);
  const bool smaller = a < mirror.first || (a == mirror.first && b < mirror.second);
  return {a, b, smaller ? CosetClass::plus_Cplus : CosetClass::minus};
}

LiftedFunction::LiftedFunction(PwlFunction base, QNum s) : base_(std::move(base)), s_(std::move(s)) {}

int LiftedFunction::sigma(const QNum& x) const {
  const KzhParams& k = kzh_params();
  const QNum r = x.frac();
  auto sign_of = [](CosetClass c) {
    return c == CosetClass::fixed_C ? 0 : (c == CosetClass::plus_Cplus ? 1 : -1);
  };
  if (k.l < r && r < k.u) return sign_of(coset_classify(r).cls);
  // Mirrored branch: antisymmetric so that the lift keeps pi(x) + pi(f - x) = 1.
  if (k.f - k.u < r && r < k.f - k.l) return -sign_of(coset_classify(k.f - r).cls);
  return 0;
}

QNum LiftedFunction::eval(const QNum& x) const {
  const int sg = sigma(x);
  const QNum v = base_.eval(x);
  if (sg == 0) return v;
  return sg > 0 ? v + s_ : v - s_;
}

const LiftedFunction& kzh_lifted() {
  static const LiftedFunction lifted(kzh_function().with_name("kzh_lifted"), kzh_params().s);
  return lifted;
}

std::vector<SelectedVertex> kzh_claim_i_selection() {
  const ComplexP& P = kzh_function().complex();
  auto x = [&P](std::size_t k) { return P.ext(k); };
  struct Raw {
    std::size_t i0, i1, j0, j1, k0, k1;
    // u = ext(up) - ext(um), v = ext(vp) - ext(vm); index 0 in the minus slot means none.
    std::size_t up, um, vp, vm;
  };
  constexpr std::size_t N = 0;
  static const Raw raw[] = {
      {0, 1, 6, 6, 8, 8, 8, 6, 6, N},        {0, 1, 6, 6, 9, 10, 9, 6, 6, N},
      {0, 1, 6, 6, 10, 11, 1, N, 6, N},      {0, 1, 10, 10, 12, 13, 12, 10, 10, N},
      {0, 1, 10, 10, 13, 14, 1, N, 10, N},   {0, 1, 13, 13, 15, 15, 15, 13, 13, N},
      {0, 1, 13, 13, 15, 16, 1, N, 13, N},   {0, 1, 36, 36, 36, 37, 0, N, 36, N},
      {0, 1, 38, 38, 38, 39, 0, N, 38, N},   {1, 2, 1, 2, 1, 2, 1, N, 1, N},
      {1, 2, 3, 3, 6, 7, 1, N, 3, N},        {1, 2, 6, 6, 11, 12, 1, N, 6, N},
      {1, 2, 6, 6, 12, 12, 12, 6, 6, N},     {1, 2, 10, 10, 14, 15, 1, N, 10, N},
      {1, 2, 11, 11, 14, 15, 1, N, 11, N},   {1, 2, 13, 13, 16, 17, 1, N, 13, N},
      {1, 2, 16, 16, 16, 17, 1, N, 16, N},   {1, 2, 18, 18, 18, 19, 1, N, 18, N},
      {1, 2, 20, 20, 20, 21, 1, N, 20, N},   {1, 2, 23, 23, 31, 31, 31, 23, 23, N},
      {1, 2, 35, 35, 35, 36, 1, N, 35, N},   {1, 2, 36, 36, 37, 38, 1, N, 36, N},
      {6, 6, 32, 32, 37, 38, 6, N, 32, N},   {6, 6, 33, 34, 37, 38, 6, N, 33, N},
      {6, 6, 34, 35, 38, 39, 6, N, 34, N},   {10, 10, 30, 31, 37, 38, 10, N, 30, N},
      {10, 10, 31, 32, 37, 38, 10, N, 31, N}, {10, 10, 32, 33, 38, 39, 10, N, 32, N},
      {10, 10, 38, 39, 44, 44, 10, N, 44, 10}, {11, 11, 22, 22, 35, 36, 11, N, 22, N},
      {13, 13, 16, 17, 18, 19, 13, N, 16, N}, {13, 13, 28, 28, 37, 38, 13, N, 28, N},
      {13, 13, 28, 29, 37, 38, 13, N, 28, N}, {13, 13, 29, 30, 38, 39, 13, N, 29, N},
      {30, 30, 39, 40, 67, 67, 30, N, 67, 30}, {33, 33, 39, 40, 71, 71, 33, N, 71, 33},
      {35, 35, 38, 39, 71, 71, 35, N, 71, 35}, {38, 38, 39, 40, 77, 78, 38, N, 39, N},
      {38, 39, 38, 39, 78, 79, 39, N, 39, N},
  };
  std::vector<SelectedVertex> out;
  for (const auto& r : raw) {
    const QNum u = r.um == N ? x(r.up) : x(r.up) - x(r.um);
    const QNum v = r.vm == N ? x(r.vp) : x(r.vp) - x(r.vm);
    out.push_back({{r.i0, r.i1}, {r.j0, r.j1}, {r.k0, r.k1}, {u, v}});
  }
  return out;
}

std::vector<std::string> catalog_names() { return {"psi", "psi_prime", "kzh", "kzh_lifted"}; }

}  // namespace cgf
