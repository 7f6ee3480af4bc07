#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latkit/catalog.hpp"
#include "latkit/metaproperty.hpp"
#include "latkit/negation.hpp"
#include "latkit/scan.hpp"

using namespace latkit;

namespace {

LogicStructure m5_logic() { return build("M5").structure(); }

}  // namespace

TEST_CASE("M5 negation is a non-contradictory fuzzy negation with b'' = 1 > b") {
  LogicStructure s = m5_logic();
  PropertyReport axioms = negation_axiom_report(s);
  CHECK(axioms.holds("weak-double-negation"));
  CHECK(axioms.holds("antitony"));
  CHECK(axioms.holds("boolean-boundary"));

  int b = s.lattice.index_of("b");
  CHECK(s.neg.of(s.neg.of(b)) == s.lattice.top());

  PropertyReport laws = law_report(s);
  CHECK(laws.holds("non-contradiction"));
  CHECK(laws.holds("disjunctive-de-morgan"));
  CHECK(!laws.holds("conjunctive-de-morgan"));
  const Witness& w = *laws.at("conjunctive-de-morgan").witness;
  CHECK(w.elements == std::vector<std::string>{"a", "b"});
  CHECK(w.lhs == "1");  // (a & b)'
  CHECK(w.rhs == "c");  // a' | b'
}

TEST_CASE("identity map on 2^2 fails the Boolean boundary") {
  CatalogEntry cube2 = build("CUBE", {2});
  NegationMap identity;
  for (int i = 0; i < cube2.lattice.size(); ++i) identity.table.push_back(i);
  LogicStructure s(cube2.lattice, identity);
  PropertyReport axioms = negation_axiom_report(s);
  CHECK(axioms.holds("weak-double-negation"));
  CHECK(!axioms.holds("boolean-boundary"));
  CHECK(axioms.at("boolean-boundary").witness->identity == "0' = 1");
}

TEST_CASE("O6 is a complemented, involutive, non-orthomodular logic") {
  LogicStructure s = build("O6").structure();
  PropertyReport laws = law_report(s);
  CHECK(laws.holds("complemented"));
  CHECK(laws.holds("involutive"));
  CHECK(laws.holds("tertium-non-datur"));
  CHECK(!laws.holds("orthomodular"));
  // the orthomodular exchange already fails at x < y: x | (x' & y) = x
  const Witness& w = *laws.at("orthomodular").witness;
  CHECK(w.elements == std::vector<std::string>{"x", "y"});
  CHECK(w.lhs == "x");
  // non-contradictory but not paraconsistent
  CHECK(laws.holds("non-contradiction"));
  CHECK(!laws.holds("paraconsistency"));
}

TEST_CASE("G6 and G8 fail orthomodularity but stay paraconsistent") {
  for (const char* name : {"G6", "G8", "G14"}) {
    LogicStructure s = build(name).structure();
    PropertyReport laws = law_report(s);
    CHECK(laws.holds("paraconsistency"));
    CHECK(!laws.holds("orthomodular"));
    CHECK(!laws.holds("non-contradiction"));
  }
  // the failing exchange in G8: x | (x' & y) = x != y
  LogicStructure g8 = build("G8").structure();
  const FiniteLattice& l = g8.lattice;
  int x = l.index_of("x"), y = l.index_of("y");
  CHECK(l.leq(x, y));
  CHECK(l.join(x, l.meet(g8.neg.of(x), y)) == x);
}

TEST_CASE("classification labels across the catalog") {
  CHECK(classify(build("MO1").structure()).label == "Boolean logic");
  CHECK(classify(build("CUBE", {1}).structure()).label == "Boolean logic");
  CHECK(classify(build("CUBE", {3}).structure()).label == "Boolean logic");
  CHECK(classify(build("M5").structure()).label == "logic");
  CHECK(classify(build("O6").structure()).label == "logic");
  CHECK(classify(build("G6").structure()).label == "paraconsistent logic");
  CHECK(classify(build("BN4").structure()).label == "paraconsistent logic");
  CHECK(classify(build("GOEDEL", {3}).structure()).label == "intuitionistic logic");
  for (int n = 2; n <= 4; ++n) {
    LogicClass c = classify(build("MO", {n}).structure());
    CHECK(c.label == "quantum logic");
    CHECK(!c.flags.distributive);
    CHECK(c.flags.orthomodular);
  }
}

TEST_CASE("BN4 is contradictory and tertium fails at b") {
  LogicStructure s = build("BN4").structure();
  const FiniteLattice& l = s.lattice;
  int b = l.index_of("b");
  CHECK(l.meet(b, s.neg.of(b)) == b);
  CHECK(l.join(b, s.neg.of(b)) == b);
  LogicClass c = classify(s);
  CHECK(!c.flags.non_contradictory);
  CHECK(!c.flags.tertium);
  CHECK(c.flags.involutive);
  CHECK(c.flags.conj_de_morgan);
  CHECK(c.flags.paraconsistent);
}

TEST_CASE("boolean implies orthomodular implies paraconsistent on the catalog") {
  for (const std::string& name : default_catalog_names()) {
    CatalogEntry e = build_by_name(name);
    if (!e.negation) continue;
    LogicClass c = classify(e.structure());
    if (c.flags.boolean) CHECK(c.flags.orthomodular);
    if (c.flags.orthomodular) CHECK(c.flags.paraconsistent);
    if (c.flags.boolean)
      CHECK((c.flags.non_contradictory && c.flags.distributive && c.flags.complemented));
    if (c.flags.intuitionistic) {
      CHECK(c.flags.distributive);
      CHECK(c.flags.non_contradictory);
    }
    // orthomodularity forces involutivity in a non-contradictory fuzzy logic
    if (c.flags.fuzzy_negation && c.flags.non_contradictory && c.flags.orthomodular)
      CHECK(c.flags.involutive);
  }
}

TEST_CASE("law witnesses reproduce the violation") {
  LogicStructure s = build("G6").structure();
  PropertyReport laws = law_report(s);
  const Witness& w = *laws.at("orthomodular").witness;
  const FiniteLattice& l = s.lattice;
  int x = l.index_of(w.elements[0]), y = l.index_of(w.elements[1]);
  REQUIRE(l.leq(x, y));
  CHECK(l.join(x, l.meet(s.neg.of(x), y)) == l.index_of(w.lhs));
  CHECK(l.index_of(w.lhs) != y);
}

TEST_CASE("metaproperty sweep finds no violations on small catalog lattices") {
  for (const char* name : {"M5", "O6", "BN4", "MO(2)", "CUBE(2)", "GOEDEL(2)"}) {
    CatalogEntry e = build_by_name(name);
    CHECK(metaproperty_sweep(e.lattice, e.name, 100, 0).empty());
  }
}

TEST_CASE("negation table size must match the carrier") {
  CatalogEntry e = build("M5");
  NegationMap bad;
  bad.table = {0, 1};
  CHECK_THROWS_AS(LogicStructure(e.lattice, bad), OutOfRange);
}
