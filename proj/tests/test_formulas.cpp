#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "latkit/catalog.hpp"
#include "latkit/formula.hpp"

using namespace latkit;

TEST_CASE("parser accepts the grammar") {
  FormulaPtr f = parse("~x | y");
  CHECK(f->kind == Connective::Or);
  CHECK(f->lhs->kind == Connective::Not);
  CHECK(f->lhs->lhs->var == "x");

  FormulaPtr g = parse("x -> y -> z");  // right-associative
  CHECK(g->kind == Connective::Imp);
  CHECK(g->rhs->kind == Connective::Imp);
  CHECK(g->lhs->var == "x");

  FormulaPtr h = parse("x & y | z");  // & binds tighter
  CHECK(h->kind == Connective::Or);
  CHECK(h->lhs->kind == Connective::And);

  FormulaPtr i = parse("x <-> y -> z");
  CHECK(i->kind == Connective::Iff);

  CHECK(parse("0")->kind == Connective::Bottom);
  CHECK(parse("1")->kind == Connective::Top);
  CHECK(parse("_under1")->var == "_under1");
}

TEST_CASE("parser rejects malformed input with positions") {
  CHECK_THROWS_AS(parse("(x & y)'"), SyntaxError);  // postfix prime not in grammar
  CHECK_THROWS_AS(parse("x &"), SyntaxError);
  CHECK_THROWS_AS(parse("(x | y"), SyntaxError);
  CHECK_THROWS_AS(parse(""), SyntaxError);
  CHECK_THROWS_AS(parse("x + y"), SyntaxError);
  CHECK_THROWS_WITH_AS(parse("x ? y"), doctest::Contains("position"), SyntaxError);
}

TEST_CASE("printer round-trips with minimal parentheses") {
  for (const char* text : {"~x | y", "x & (y | z)", "x -> y -> z", "(x -> y) -> z",
                           "x <-> y", "~(x & y)", "x | y | z", "0 -> x", "~~x"}) {
    FormulaPtr f = parse(text);
    std::string printed = print(f);
    CHECK(print(parse(printed)) == printed);
  }
  CHECK(print(parse("x | (y & z)")) == "x | y & z");
  CHECK(print(parse("(x | y) & z")) == "(x | y) & z");
}

namespace {

FormulaPtr random_formula_full(std::mt19937& rng, int depth) {
  static const char* vars[] = {"x", "y", "z"};
  if (depth == 0 || rng() % 5 == 0) {
    switch (rng() % 5) {
      case 0: return Formula::constant(false);
      case 1: return Formula::constant(true);
      default: return Formula::variable(vars[rng() % 3]);
    }
  }
  switch (rng() % 5) {
    case 0: return Formula::make(Connective::Not, random_formula_full(rng, depth - 1));
    case 1:
      return Formula::make(Connective::And, random_formula_full(rng, depth - 1),
                           random_formula_full(rng, depth - 1));
    case 2:
      return Formula::make(Connective::Or, random_formula_full(rng, depth - 1),
                           random_formula_full(rng, depth - 1));
    case 3:
      return Formula::make(Connective::Imp, random_formula_full(rng, depth - 1),
                           random_formula_full(rng, depth - 1));
    default:
      return Formula::make(Connective::Iff, random_formula_full(rng, depth - 1),
                           random_formula_full(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("print/parse round-trip on random formulas over all connectives") {
  std::mt19937 rng(7);
  LogicStructure cube = build("CUBE", {2}).structure();
  ImplicationSemantics sem = ImplicationSemantics::ortho();
  for (int trial = 0; trial < 300; ++trial) {
    FormulaPtr f = random_formula_full(rng, 4);
    FormulaPtr back = parse(print(f));
    CHECK(print(back) == print(f));
    // and the reparse is semantically identical, not just textually
    CHECK(holds_identity(cube, sem, f, back).holds);
  }
}

TEST_CASE("evaluation on three-valued logics") {
  CatalogEntry l3 = build("LUK", {2});
  LogicStructure s = l3.structure();
  int half = s.lattice.index_of("1/2");

  // ortho arrow: x | ~x at 1/2 stays 1/2
  CHECK(eval(parse("x | ~x"), s, ImplicationSemantics::ortho(), {{"x", half}}) == half);

  CatalogEntry g3 = build("GOEDEL", {2});
  LogicStructure gs = g3.structure();
  int ghalf = gs.lattice.index_of("1/2");
  CHECK(eval(parse("x & ~x"), gs, ImplicationSemantics::ortho(), {{"x", ghalf}}) ==
        gs.lattice.bottom());

  // residuated arrow: x -> x = 1
  ImplicationSemantics res = default_semantics(gs);
  CHECK(res.kind == ImplicationSemantics::ResiduatedArrow);
  for (int x = 0; x < gs.lattice.size(); ++x)
    CHECK(eval(parse("x -> x"), gs, res, {{"x", x}}) == gs.lattice.top());

  CHECK_THROWS_AS(eval(parse("x & y"), s, ImplicationSemantics::ortho(), {{"x", half}}),
                  UnboundVariable);
}

TEST_CASE("table arrow uses the stored implication table") {
  CatalogEntry bn4 = build("BN4");
  LogicStructure s = bn4.structure();
  ImplicationSemantics sem = ImplicationSemantics::from_table(*bn4.implication);
  int n = s.lattice.index_of("n"), b = s.lattice.index_of("b");
  CHECK(eval(parse("x -> y"), s, sem, {{"x", n}, {"y", b}}) == n);
  CHECK(eval(parse("x -> y"), s, sem, {{"x", b}, {"y", n}}) == n);
}

TEST_CASE("holds_identity: De Morgan on the M5 logic") {
  LogicStructure s = build("M5").structure();
  ImplicationSemantics sem = ImplicationSemantics::ortho();
  CHECK(holds_identity(s, sem, parse("~(x | y)"), parse("~x & ~y")).holds);

  IdentityResult conj = holds_identity(s, sem, parse("~(x & y)"), parse("~x | ~y"));
  CHECK(!conj.holds);
  REQUIRE(conj.witness.has_value());
  CHECK(conj.witness->elements == std::vector<std::string>{"a", "b"});

  CHECK(holds_identity(s, sem, parse("x"), parse("x")).holds);
}

TEST_CASE("the nine propositional tautologies") {
  for (const char* text :
       {"x | ~x", "0 -> x", "x -> 1", "x -> x", "x <-> x", "x -> (y -> x)",
        "(x <-> y) <-> (y <-> x)", "(x <-> 0) | (x <-> 1)", "(x -> y) | (y -> x)"}) {
    CAPTURE(text);
    CHECK(boolean_tautology(parse(text)));
  }
  // the mid-valued equivalence variant is falsifiable at x=0, y=1
  CHECK(!boolean_tautology(parse("(x <-> y) | (y -> x)")));
  CHECK(boolean_tautology(parse("((x -> y) -> x) -> x")));  // Peirce
  CHECK(!boolean_tautology(parse("x -> y")));
  CHECK(!boolean_tautology(parse("x | y")));
}

TEST_CASE("contraposition and Boolean-ring identities on Boolean entries") {
  for (const char* name : {"CUBE(2)", "CUBE(3)", "MO1", "REGISTER2"}) {
    LogicStructure s = build_by_name(name).structure();
    CHECK(holds_identity(s, ImplicationSemantics::ortho(), parse("x -> y"),
                         parse("~y -> ~x"))
              .holds);
    // ring view: x + y = (x & y') | (x' & y), then x | y = x + y + xy
    // and x' = 1 + x
    const FiniteLattice& l = s.lattice;
    auto plus = [&](int x, int y) {
      return l.join(l.meet(x, s.neg.of(y)), l.meet(s.neg.of(x), y));
    };
    for (int x = 0; x < l.size(); ++x) {
      CHECK(s.neg.of(x) == plus(l.top(), x));
      for (int y = 0; y < l.size(); ++y)
        CHECK(l.join(x, y) == plus(plus(x, y), l.meet(x, y)));
    }
  }
}

TEST_CASE("normal forms") {
  auto nf = normal_form(parse("x & (y | z)"), NormalFormMode::JoinOfMeets);
  CHECK(nf == std::vector<std::set<std::string>>{{"x", "y"}, {"x", "z"}});

  auto absorbed = normal_form(parse("x | (x & y)"), NormalFormMode::JoinOfMeets);
  CHECK(absorbed == std::vector<std::set<std::string>>{{"x"}});

  auto dualnf = normal_form(parse("(x | y) & (x | z)"), NormalFormMode::MeetOfJoins);
  CHECK(dualnf == std::vector<std::set<std::string>>{{"x", "y"}, {"x", "z"}});

  CHECK_THROWS_AS(normal_form(parse("~x & y"), NormalFormMode::JoinOfMeets),
                  UnsupportedConnective);
  CHECK_THROWS_AS(normal_form(parse("x -> y"), NormalFormMode::MeetOfJoins),
                  UnsupportedConnective);
}

namespace {

FormulaPtr rebuild(const std::vector<std::set<std::string>>& clauses, NormalFormMode mode) {
  FormulaPtr acc;
  for (const auto& clause : clauses) {
    FormulaPtr term;
    for (const auto& v : clause) {
      FormulaPtr var = Formula::variable(v);
      term = term ? Formula::make(mode == NormalFormMode::JoinOfMeets ? Connective::And
                                                                      : Connective::Or,
                                  term, var)
                  : var;
    }
    acc = acc ? Formula::make(mode == NormalFormMode::JoinOfMeets ? Connective::Or
                                                                  : Connective::And,
                              acc, term)
              : term;
  }
  return acc;
}

FormulaPtr random_monotone_formula(std::mt19937& rng, int depth) {
  static const char* vars[] = {"x", "y", "z", "w"};
  if (depth == 0 || rng() % 4 == 0) return Formula::variable(vars[rng() % 4]);
  FormulaPtr a = random_monotone_formula(rng, depth - 1);
  FormulaPtr b = random_monotone_formula(rng, depth - 1);
  return Formula::make(rng() % 2 ? Connective::And : Connective::Or, a, b);
}

}  // namespace

TEST_CASE("normal forms round-trip to identities on the cube") {
  LogicStructure cube = build("CUBE", {3}).structure();
  ImplicationSemantics sem = ImplicationSemantics::ortho();
  std::mt19937 rng(0);
  for (int trial = 0; trial < 40; ++trial) {
    FormulaPtr f = random_monotone_formula(rng, 3);
    for (NormalFormMode mode : {NormalFormMode::JoinOfMeets, NormalFormMode::MeetOfJoins}) {
      FormulaPtr back = rebuild(normal_form(f, mode), mode);
      CHECK(holds_identity(cube, sem, f, back).holds);
    }
  }
}

TEST_CASE("default semantics picks residuated on Heyting lattices, ortho otherwise") {
  CHECK(default_semantics(build("GOEDEL", {2}).structure()).kind ==
        ImplicationSemantics::ResiduatedArrow);
  CHECK(default_semantics(build("MO", {2}).structure()).kind ==
        ImplicationSemantics::OrthoArrow);
}

TEST_CASE("mismatched implication tables are rejected") {
  LogicStructure m5 = build("M5").structure();
  ResiduumTable tiny;
  tiny.n = 2;
  tiny.arrow = {0, 1, 1, 1};
  ImplicationSemantics sem = ImplicationSemantics::from_table(tiny);
  CHECK_THROWS_AS(eval(parse("x -> y"), m5, sem, {{"x", 0}, {"y", 1}}),
                  SemanticsUnavailable);
  CHECK_THROWS_AS(holds_identity(m5, sem, parse("x -> y"), parse("y")),
                  SemanticsUnavailable);
}
