#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latkit/catalog.hpp"
#include "latkit/residuation.hpp"
#include "latkit/scan.hpp"

using namespace latkit;

TEST_CASE("name grammar is case-insensitive and validates parameters") {
  CHECK(build_by_name("m5").name == "M5");
  CHECK(build_by_name("Mo(3)").name == "MO(3)");
  CHECK(build_by_name("lstar_grid(2)").name == "LSTAR_GRID(2)");
  CHECK_THROWS_AS(build_by_name("nosuch"), UnknownName);
  CHECK_THROWS_AS(build_by_name("LUK(0)"), BadParams);
  CHECK_THROWS_AS(build_by_name("RM(4)"), BadParams);
  CHECK_THROWS_AS(build_by_name("RM(1)"), BadParams);
  CHECK_THROWS_AS(build_by_name("M5(2)"), BadParams);
  CHECK_THROWS_AS(build_by_name("MO(x)"), BadParams);
  CHECK_THROWS_AS(build_by_name("MO(3"), UnknownName);
  CHECK_THROWS_AS(build_by_name("CUBE(7)"), BadParams);
}

TEST_CASE("LUK(2) has the weak-contraction failure") {
  CatalogEntry e = build("LUK", {2});
  int half = e.lattice.index_of("1/2");
  CHECK(e.fusion->of(half, half) == e.lattice.index_of("0"));
  CHECK(e.negation->of(half) == half);
}

TEST_CASE("RM(3) negates by sign and fails tertium at 0") {
  CatalogEntry e = build("RM", {3});
  int zero = e.lattice.index_of("0");
  CHECK(e.negation->of(zero) == zero);
  CHECK(e.lattice.join(zero, e.negation->of(zero)) == zero);  // 0 | -0 = 0 < 1
  // fusion is idempotent on Sugihara models
  for (int a = 0; a < e.lattice.size(); ++a) CHECK(e.fusion->of(a, a) == a);
}

TEST_CASE("CUBE(1) is the two-element Boolean logic") {
  CatalogEntry e = build("CUBE", {1});
  CHECK(e.lattice.size() == 2);
  CHECK(classify(e.structure()).label == "Boolean logic");
}

TEST_CASE("LSTAR_GRID order, negation and size") {
  CatalogEntry e = build("LSTAR_GRID", {2});
  CHECK(e.lattice.size() == 6);  // (n+1)(n+2)/2
  const FiniteLattice& l = e.lattice;
  int bottom = l.index_of("(0,1)"), top = l.index_of("(1,0)");
  CHECK(l.bottom() == bottom);
  CHECK(l.top() == top);
  int p = l.index_of("(1/2,1/2)");
  REQUIRE(p >= 0);
  CHECK(e.negation->of(p) == p);  // (x1,x2)' = (x2,x1)

  LogicClass c = classify(e.structure());
  CHECK(c.flags.distributive);
  CHECK(c.flags.involutive);
  CHECK(c.flags.conj_de_morgan);
  CHECK(!c.flags.non_contradictory);
  CHECK(!c.flags.tertium);
  CHECK(c.flags.paraconsistent);

  // non-contradiction fails at the interior point
  CHECK(l.meet(p, e.negation->of(p)) != l.bottom());
}

TEST_CASE("LSTAR_GRID fails non-contradiction and tertium at every interior point") {
  for (int n = 2; n <= 3; ++n) {
    CatalogEntry e = build("LSTAR_GRID", {n});
    const FiniteLattice& l = e.lattice;
    for (int p = 0; p < l.size(); ++p) {
      // points (x1,x2) with 0 < xi < 1 for at least one coordinate
      const std::string& name = l.name(p);
      bool interior = name.find('/') != std::string::npos;
      if (!interior) continue;
      CHECK(l.meet(p, e.negation->of(p)) != l.bottom());
      CHECK(l.join(p, e.negation->of(p)) != l.top());
    }
  }
}

TEST_CASE("MO(n) sizes and expected classes") {
  for (int n = 1; n <= 5; ++n) {
    CatalogEntry e = build("MO", {n});
    CHECK(e.lattice.size() == 2 * n + 2);
    LogicClass c = classify(e.structure());
    CHECK(c.flags.orthomodular);
    CHECK((n == 1 ? c.label == "Boolean logic" : c.label == "quantum logic"));
  }
}

TEST_CASE("G3 is the Heyting lattice: residuum equals the meet residuation") {
  CatalogEntry e = build("GOEDEL", {2});
  ImplicativeReport rep = implicative_report(e.lattice);
  REQUIRE(rep.residuum.has_value());
  for (int i = 0; i < e.lattice.size(); ++i)
    for (int j = 0; j < e.lattice.size(); ++j)
      CHECK(rep.residuum->of(i, j) == e.implication->of(i, j));
}

TEST_CASE("REGISTER2 wires the pair labels to the right joins") {
  CatalogEntry e = build("REGISTER2");
  const FiniteLattice& l = e.lattice;
  CHECK(l.size() == 16);
  CHECK(l.join(l.index_of("p00"), l.index_of("p01")) == l.index_of("u"));
  CHECK(l.join(l.index_of("p00"), l.index_of("p10")) == l.index_of("v"));
  CHECK(l.join(l.index_of("p00"), l.index_of("p11")) == l.index_of("w"));
  CHECK(l.join(l.index_of("p01"), l.index_of("p10")) == l.index_of("x"));
  CHECK(l.join(l.index_of("p01"), l.index_of("p11")) == l.index_of("y"));
  CHECK(l.join(l.index_of("p10"), l.index_of("p11")) == l.index_of("z"));
  CHECK(e.negation->of(l.index_of("p11")) == l.index_of("p11'"));
  CHECK(classify(e.structure()).label == "Boolean logic");
}

TEST_CASE("F2 is the four-element free lattice on two generators") {
  CatalogEntry e = build("F2");
  CHECK(e.lattice.size() == 4);
  CHECK(is_isomorphic(e.lattice, build("CUBE", {2}).lattice));
  int x = e.lattice.index_of("x"), y = e.lattice.index_of("y");
  CHECK(e.lattice.meet(x, y) == e.lattice.index_of("v"));
  CHECK(e.lattice.join(x, y) == e.lattice.index_of("u"));
}

TEST_CASE("catalog selftest passes for every entry") {
  for (const auto& r : catalog_selftest()) {
    CAPTURE(r.name);
    for (const auto& d : r.diagnostics) CAPTURE(d);
    CHECK(r.pass);
  }
}

TEST_CASE("L7 repairs the orthomodular exchange that fails in O6") {
  CatalogEntry o6 = build("O6"), l7 = build("L7");
  int ox = o6.lattice.index_of("x"), oy = o6.lattice.index_of("y"),
      oxp = o6.lattice.index_of("x'");
  CHECK(o6.lattice.join(ox, o6.lattice.meet(oxp, oy)) == ox);  // fails: = x != y
  int lx = l7.lattice.index_of("x"), ly = l7.lattice.index_of("y"),
      lxp = l7.lattice.index_of("x'");
  CHECK(l7.lattice.meet(lxp, ly) == l7.lattice.index_of("m"));  // x' & y > 0
  CHECK(l7.lattice.join(lx, l7.lattice.meet(lxp, ly)) == ly);   // repaired
}
