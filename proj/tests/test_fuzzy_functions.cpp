#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "latkit/fuzzy_logic.hpp"
#include "latkit/scan.hpp"

using namespace latkit;

namespace {

PiecewiseLinear ramp_up(int x0, int x1) {
  return PiecewiseLinear({{Rational(x0), Rational(0)}, {Rational(x1), Rational(1)}});
}

}  // namespace

TEST_CASE("canonical form merges collinear and flat breakpoints") {
  PiecewiseLinear f({{Rational(0), Rational(0)},
                     {Rational(1), Rational(1, 2)},
                     {Rational(2), Rational(1)},
                     {Rational(3), Rational(1)}});
  CHECK(f.breakpoints().size() == 2);
  CHECK(f == ramp_up(0, 2));

  PiecewiseLinear c({{Rational(7), Rational(1, 3)}, {Rational(9), Rational(1, 3)}});
  CHECK(c == PiecewiseLinear::constant(Rational(1, 3)));

  CHECK_THROWS_AS(PiecewiseLinear({{Rational(0), Rational(2)}}), OutOfRange);
  CHECK_THROWS_AS(
      PiecewiseLinear({{Rational(1), Rational(0)}, {Rational(1), Rational(1)}}),
      OutOfRange);
}

TEST_CASE("evaluation interpolates and extends constantly") {
  PiecewiseLinear f = ramp_up(0, 10);
  CHECK(f.eval(Rational(-5)) == Rational(0));
  CHECK(f.eval(Rational(5)) == Rational(1, 2));
  CHECK(f.eval(Rational(7, 2)) == Rational(7, 20));
  CHECK(f.eval(Rational(25)) == Rational(1));
}

TEST_CASE("pointwise operations: idempotence, involution, crossings") {
  PiecewiseLinear f = ramp_up(0, 10);
  CHECK(pwl_min(f, f) == f);
  CHECK(pwl_luk_neg(pwl_luk_neg(f)) == f);

  // crossing at x = 5 becomes a breakpoint of the min
  PiecewiseLinear g = pwl_luk_neg(f);
  PiecewiseLinear m = pwl_min(f, g);
  CHECK(m.eval(Rational(5)) == Rational(1, 2));
  CHECK(m.eval(Rational(0)) == Rational(0));
  CHECK(m.eval(Rational(10)) == Rational(0));
  bool has_peak = false;
  for (const auto& p : m.breakpoints())
    if (p.x == Rational(5) && p.y == Rational(1, 2)) has_peak = true;
  CHECK(has_peak);
}

TEST_CASE("pwl_leq on breakpoint refinements") {
  PiecewiseLinear f = ramp_up(0, 10);
  CHECK(pwl_leq(f, PiecewiseLinear::constant(Rational(1))));
  CHECK(pwl_leq(PiecewiseLinear::constant(Rational(0)), f));
  // crossing pair is incomparable both ways
  PiecewiseLinear g = pwl_luk_neg(f);
  CHECK(!pwl_leq(f, g));
  CHECK(!pwl_leq(g, f));
}

TEST_CASE("temperature generators match their defining values") {
  TemperatureGenerators t = temperature_generators();
  CHECK(t.a.eval(Rational(10)) == Rational(1, 2));
  CHECK(t.a.eval(Rational(0)) == Rational(1));
  CHECK(t.b.eval(Rational(20)) == Rational(1));
  CHECK(t.b.eval(Rational(30)) == Rational(1, 2));
  CHECK(t.c.eval(Rational(40)) == Rational(1));
  CHECK(t.c.eval(Rational(20)) == Rational(0));

  // a & b & c = 0 and a | b | c >= 1/2 everywhere
  PiecewiseLinear all_meet = pwl_min(pwl_min(t.a, t.b), t.c);
  CHECK(all_meet == PiecewiseLinear::constant(Rational(0)));
  PiecewiseLinear all_join = pwl_max(pwl_max(t.a, t.b), t.c);
  CHECK(pwl_leq(PiecewiseLinear::constant(Rational(1, 2)), all_join));

  // "cold and not cold" peaks at 1/2 for 10 degrees
  PiecewiseLinear cold_and_not = pwl_min(t.a, pwl_luk_neg(t.a));
  CHECK(cold_and_not.eval(Rational(10)) == Rational(1, 2));
}

TEST_CASE("closure of a single constant is the three-valued chain") {
  FunctionLogic logic = closure_lattice({PiecewiseLinear::constant(Rational(1, 2))}, {"h"});
  CHECK(logic.elements.size() == 3);
  CHECK(classify(logic.structure).label == "paraconsistent logic");
}

TEST_CASE("closure of the zero constant is the two-element chain") {
  FunctionLogic logic = closure_lattice({PiecewiseLinear::constant(Rational(0))});
  CHECK(logic.elements.size() == 2);
}

TEST_CASE("closure budget fires") {
  TemperatureGenerators t = temperature_generators();
  CHECK_THROWS_AS(closure_lattice({t.a, t.b, t.c}, {"a", "b", "c"}, 7),
                  ClosureBudgetExceeded);
}

TEST_CASE("temperature closure has exactly 18 elements and its characteristic identities") {
  TemperatureGenerators t = temperature_generators();
  FunctionLogic logic = closure_lattice({t.a, t.b, t.c}, {"a", "b", "c"});
  CHECK(logic.elements.size() == 18);

  PiecewiseLinear bb = pwl_min(t.b, pwl_luk_neg(t.b));
  PiecewiseLinear aa = pwl_min(t.a, pwl_luk_neg(t.a));
  PiecewiseLinear cc = pwl_min(t.c, pwl_luk_neg(t.c));
  CHECK(bb == pwl_max(aa, cc));  // b & b' = (a & a') | (c & c')

  // every generator is contradictory: f & f' != 0
  for (const auto& f : {t.a, t.b, t.c})
    CHECK(pwl_min(f, pwl_luk_neg(f)) != PiecewiseLinear::constant(Rational(0)));

  // a < b', and the pointwise orthomodular exchange at (a, b') in fact closes:
  // a | (a' & b') = b' (the pair is not a counterexample)
  PiecewiseLinear bp = pwl_luk_neg(t.b);
  CHECK(pwl_leq(t.a, bp));
  CHECK(t.a != bp);
  PiecewiseLinear apbp = pwl_min(pwl_luk_neg(t.a), bp);
  CHECK(pwl_max(t.a, apbp) == bp);
  CHECK(apbp != bp);

  // the logic is nevertheless non-orthomodular, e.g. at (b & b', c')
  PropertyReport laws = law_report(logic.structure);
  CHECK(!laws.holds("orthomodular"));
  int x = logic.index_of(bb), y = logic.index_of(pwl_luk_neg(t.c));
  REQUIRE(x >= 0);
  REQUIRE(y >= 0);
  CHECK(logic.structure.lattice.leq(x, y));
  CHECK(logic.structure.lattice.join(
            x, logic.structure.lattice.meet(logic.structure.neg.of(x), y)) != y);

  // fuzzy negation axioms hold; the logic is contradictory
  PropertyReport axioms = negation_axiom_report(logic.structure);
  for (const auto& v : axioms.verdicts()) CHECK(v.holds);
  CHECK(!laws.holds("non-contradiction"));

  // no O6 sublattice
  CHECK(!find_forbidden_sublattice(logic.structure.lattice, SublatticePattern::O6));
}

TEST_CASE("the eighteen closure elements are exactly the expected functions") {
  TemperatureGenerators t = temperature_generators();
  FunctionLogic logic = closure_lattice({t.a, t.b, t.c}, {"a", "b", "c"});
  REQUIRE(logic.elements.size() == 18);
  PiecewiseLinear zero = PiecewiseLinear::constant(Rational(0));
  PiecewiseLinear one = PiecewiseLinear::constant(Rational(1));
  PiecewiseLinear ap = pwl_luk_neg(t.a), bp = pwl_luk_neg(t.b), cp = pwl_luk_neg(t.c);
  std::vector<PiecewiseLinear> expected{
      zero,
      pwl_min(t.a, ap),
      pwl_min(t.c, cp),
      t.a,
      pwl_min(t.b, bp),
      t.c,
      pwl_min(bp, cp),
      t.b,
      pwl_min(ap, bp),
      pwl_max(t.a, t.b),
      bp,
      pwl_max(t.b, t.c),
      ap,
      pwl_max(t.b, bp),
      cp,
      pwl_max(t.a, ap),
      pwl_max(t.c, cp),
      one,
  };
  REQUIRE(expected.size() == 18);
  for (const auto& f : expected) CHECK(logic.index_of(f) >= 0);

  // meet/join tables of the generated lattice agree with pointwise min/max
  const FiniteLattice& l = logic.structure.lattice;
  for (int i = 0; i < l.size(); ++i)
    for (int j = 0; j < l.size(); ++j) {
      CHECK(logic.elements[l.meet(i, j)] == pwl_min(logic.elements[i], logic.elements[j]));
      CHECK(logic.elements[l.join(i, j)] == pwl_max(logic.elements[i], logic.elements[j]));
    }
}

TEST_CASE("combine agrees pointwise with eval on random functions") {
  std::mt19937 rng(1);
  auto random_pwl = [&] {
    int k = 1 + (int)(rng() % 4);
    std::vector<PiecewiseLinear::Point> pts;
    int x = (int)(rng() % 5);
    for (int i = 0; i < k; ++i) {
      pts.push_back({Rational(x), Rational((int)(rng() % 7), 6)});
      x += 1 + (int)(rng() % 4);
    }
    return PiecewiseLinear(std::move(pts));
  };
  for (int trial = 0; trial < 200; ++trial) {
    PiecewiseLinear f = random_pwl(), g = random_pwl();
    PiecewiseLinear mn = pwl_min(f, g), mx = pwl_max(f, g), ng = pwl_luk_neg(f);
    // sample breakpoints, midpoints between them, and points beyond the ends
    std::vector<Rational> xs{Rational(-100), Rational(100)};
    for (const auto& h : {f, g, mn, mx})
      for (const auto& p : h.breakpoints()) {
        xs.push_back(p.x);
        xs.push_back(p.x + Rational(1, 3));
        xs.push_back(p.x - Rational(1, 7));
      }
    for (const auto& x : xs) {
      CHECK(mn.eval(x) == min(f.eval(x), g.eval(x)));
      CHECK(mx.eval(x) == max(f.eval(x), g.eval(x)));
      CHECK(ng.eval(x) == Rational(1) - f.eval(x));
    }
    // pwl_leq agrees with pointwise dominance on the sample
    bool leq = pwl_leq(f, g);
    bool sampled = true;
    for (const auto& x : xs) sampled &= f.eval(x) <= g.eval(x);
    if (leq) CHECK(sampled);
    if (!sampled) CHECK(!leq);
    // canonicalization is idempotent: rebuilding from breakpoints is a no-op
    CHECK(PiecewiseLinear(mn.breakpoints()) == mn);
  }
}

TEST_CASE("every generated function logic passes the negation axioms") {
  TemperatureGenerators t = temperature_generators();
  for (const auto& gens : {std::vector<PiecewiseLinear>{t.a},
                           std::vector<PiecewiseLinear>{t.a, t.c},
                           std::vector<PiecewiseLinear>{t.b}}) {
    FunctionLogic logic = closure_lattice(gens);
    PropertyReport axioms = negation_axiom_report(logic.structure);
    for (const auto& v : axioms.verdicts()) CHECK(v.holds);
  }
}
