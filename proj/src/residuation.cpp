#include "latkit/residuation.hpp"

#include <cassert>
#include <numeric>
#include <tuple>

#include "latkit/scan.hpp"

namespace latkit {

std::optional<int> relative_pseudocomplement(const FiniteLattice& l, int a, int b) {
  std::vector<int> candidates;
  for (int x = 0; x < l.size(); ++x)
    if (l.leq(l.meet(a, x), b)) candidates.push_back(x);
  for (int m : candidates) {
    bool greatest = true;
    for (int x : candidates)
      if (!l.leq(x, m)) {
        greatest = false;
        break;
      }
    if (greatest) return m;
  }
  return std::nullopt;
}

ImplicativeReport implicative_report(const FiniteLattice& l) {
  int n = l.size();
  ImplicativeReport out;

  ResiduumTable table;
  table.n = n;
  table.arrow.assign((std::size_t)n * n, -1);
  PropertyVerdict impl{"implicative", true, std::nullopt};
  for (int a = 0; a < n && impl.holds; ++a)
    for (int b = 0; b < n && impl.holds; ++b) {
      auto rpc = relative_pseudocomplement(l, a, b);
      if (!rpc) {
        impl.holds = false;
        Witness w;
        w.elements = {l.name(a), l.name(b)};
        w.identity = "{x : a & x <= b} has a greatest element";
        w.lhs = l.name(a);
        w.rhs = l.name(b);
        impl.witness = std::move(w);
      } else {
        table.arrow[(std::size_t)a * n + b] = *rpc;
      }
    }
  out.report.add(impl);
  if (!impl.holds) return out;

  auto arrow = [&](int a, int b) { return table.of(a, b); };
  auto check = [&](const std::string& prop, auto body) {
    PropertyVerdict v{prop, true, std::nullopt};
    body(v);
    assert(v.holds);  // theorems of implicative lattices
    out.report.add(std::move(v));
  };
  auto fail = [&](PropertyVerdict& v, std::vector<int> elems, const std::string& id,
                  int lhs, int rhs) {
    v.holds = false;
    Witness w;
    for (int e : elems) w.elements.push_back(l.name(e));
    w.identity = id;
    w.lhs = l.name(lhs);
    w.rhs = l.name(rhs);
    v.witness = std::move(w);
  };

  check("modus-ponens", [&](PropertyVerdict& v) {
    for (int a = 0; a < n && v.holds; ++a)
      for (int b = 0; b < n && v.holds; ++b)
        if (!l.leq(l.meet(a, arrow(a, b)), b))
          fail(v, {a, b}, "a & (a->b) <= b", l.meet(a, arrow(a, b)), b);
  });
  check("residuation", [&](PropertyVerdict& v) {
    for (int a = 0; a < n && v.holds; ++a)
      for (int b = 0; b < n && v.holds; ++b)
        for (int c = 0; c < n && v.holds; ++c)
          if (l.leq(l.meet(a, c), b) != l.leq(c, arrow(a, b)))
            fail(v, {a, b, c}, "a & c <= b <=> c <= a->b", c, arrow(a, b));
  });
  check("arrow-monotony", [&](PropertyVerdict& v) {
    for (int a = 0; a < n && v.holds; ++a)
      for (int b = 0; b < n && v.holds; ++b) {
        if (!l.leq(a, b)) continue;
        for (int c = 0; c < n && v.holds; ++c) {
          if (!l.leq(arrow(b, c), arrow(a, c)))
            fail(v, {a, b, c}, "a <= b => b->c <= a->c", arrow(b, c), arrow(a, c));
          else if (!l.leq(arrow(c, a), arrow(c, b)))
            fail(v, {a, b, c}, "a <= b => c->a <= c->b", arrow(c, a), arrow(c, b));
        }
      }
  });
  check("arrow-weakening", [&](PropertyVerdict& v) {
    for (int a = 0; a < n && v.holds; ++a)
      for (int b = 0; b < n && v.holds; ++b)
        if (!l.leq(b, arrow(a, b))) fail(v, {a, b}, "b <= a->b", b, arrow(a, b));
  });
  check("arrow-currying", [&](PropertyVerdict& v) {
    for (int a = 0; a < n && v.holds; ++a)
      for (int b = 0; b < n && v.holds; ++b)
        for (int c = 0; c < n && v.holds; ++c) {
          int l1 = arrow(a, arrow(b, c)), l2 = arrow(l.meet(a, b), c),
              l3 = arrow(b, arrow(a, c));
          if (l1 != l2 || l2 != l3)
            fail(v, {a, b, c}, "a->(b->c) = (a&b)->c = b->(a->c)", l1, l2);
        }
  });
  check("arrow-self-distribution", [&](PropertyVerdict& v) {
    for (int a = 0; a < n && v.holds; ++a)
      for (int b = 0; b < n && v.holds; ++b)
        for (int c = 0; c < n && v.holds; ++c)
          if (!l.leq(arrow(a, arrow(b, c)), arrow(arrow(a, b), arrow(a, c))))
            fail(v, {a, b, c}, "a->(b->c) <= (a->b)->(a->c)", arrow(a, arrow(b, c)),
                 arrow(arrow(a, b), arrow(a, c)));
  });
  check("arrow-meet-distribution", [&](PropertyVerdict& v) {
    for (int a = 0; a < n && v.holds; ++a)
      for (int b = 0; b < n && v.holds; ++b)
        for (int c = 0; c < n && v.holds; ++c)
          if (arrow(a, l.meet(b, c)) != l.meet(arrow(a, b), arrow(a, c)))
            fail(v, {a, b, c}, "a->(b&c) = (a->b)&(a->c)", arrow(a, l.meet(b, c)),
                 l.meet(arrow(a, b), arrow(a, c)));
  });
  check("arrow-contraction", [&](PropertyVerdict& v) {
    for (int a = 0; a < n && v.holds; ++a)
      for (int b = 0; b < n && v.holds; ++b)
        if (arrow(a, arrow(a, b)) != arrow(a, b))
          fail(v, {a, b}, "a->(a->b) = a->b", arrow(a, arrow(a, b)), arrow(a, b));
  });
  check("arrow-top-unit", [&](PropertyVerdict& v) {
    for (int a = 0; a < n && v.holds; ++a)
      if (arrow(l.top(), a) != a) fail(v, {a}, "1->a = a", arrow(l.top(), a), a);
  });
  check("arrow-order-reflection", [&](PropertyVerdict& v) {
    for (int a = 0; a < n && v.holds; ++a)
      for (int b = 0; b < n && v.holds; ++b)
        if (l.leq(a, b) != (arrow(a, b) == l.top()))
          fail(v, {a, b}, "a <= b <=> a->b = 1", arrow(a, b), l.top());
  });
  check("arrow-negation-bounds", [&](PropertyVerdict& v) {
    for (int a = 0; a < n && v.holds; ++a)
      for (int b = 0; b < n && v.holds; ++b) {
        int na = arrow(a, l.bottom());
        if (!l.leq(l.join(na, b), arrow(a, b)))
          fail(v, {a, b}, "~a | b <= a->b", l.join(na, b), arrow(a, b));
        else if (!l.leq(l.meet(l.join(na, a), arrow(a, b)), l.join(na, b)))
          fail(v, {a, b}, "(~a|a) & (a->b) <= ~a | b",
               l.meet(l.join(na, a), arrow(a, b)), l.join(na, b));
      }
  });
  check("arrow-join-splitting", [&](PropertyVerdict& v) {
    for (int a = 0; a < n && v.holds; ++a)
      for (int b = 0; b < n && v.holds; ++b)
        for (int c = 0; c < n && v.holds; ++c)
          if (arrow(l.join(a, b), c) != l.meet(arrow(a, c), arrow(b, c)))
            fail(v, {a, b, c}, "(a|b)->c = (a->c)&(b->c)", arrow(l.join(a, b), c),
                 l.meet(arrow(a, c), arrow(b, c)));
  });

  // Implicative lattices are distributive.
  assert(property_scan(l).holds("distributive"));

  out.residuum = std::move(table);
  out.pseudocomplement.resize(n);
  for (int a = 0; a < n; ++a) out.pseudocomplement[a] = out.residuum->of(a, l.bottom());
  return out;
}

PropertyReport boolean_equivalence_report(const FiniteLattice& l) {
  ImplicativeReport impl = implicative_report(l);
  if (!impl.residuum) throw NotImplicative("lattice is not implicative");
  const ResiduumTable& t = *impl.residuum;
  int n = l.size();
  auto neg = [&](int a) { return t.of(a, l.bottom()); };

  PropertyReport report;
  auto add = [&](const std::string& prop, auto holds_fn) {
    PropertyVerdict v{prop, true, std::nullopt};
    for (int a = 0; a < n && v.holds; ++a)
      for (int b = 0; b < n && v.holds; ++b) {
        auto [ok, elems, id, lhs, rhs] = holds_fn(a, b);
        if (!ok) {
          v.holds = false;
          Witness w;
          for (int e : elems) w.elements.push_back(l.name(e));
          w.identity = id;
          w.lhs = l.name(lhs);
          w.rhs = l.name(rhs);
          v.witness = std::move(w);
        }
      }
    report.add(std::move(v));
  };
  using R = std::tuple<bool, std::vector<int>, std::string, int, int>;

  add("stability", [&](int a, int) -> R {
    int nn = neg(neg(a));
    return {a == nn, {a}, "a = ~~a", a, nn};
  });
  add("tertium", [&](int a, int) -> R {
    int j = l.join(a, neg(a));
    return {j == l.top(), {a}, "1 = a | ~a", l.top(), j};
  });
  add("peirce", [&](int a, int b) -> R {
    int p = t.of(t.of(a, b), a);
    return {p == a, {a, b}, "a = (a->b)->a", a, p};
  });
  add("join-with-arrow", [&](int a, int b) -> R {
    int j = l.join(a, t.of(a, b));
    return {j == l.top(), {a, b}, "1 = a | (a->b)", l.top(), j};
  });

  // The four conditions agree on every implicative lattice.
  bool first = report.verdicts().front().holds;
  for (const auto& v : report.verdicts()) assert(v.holds == first);
  return report;
}

std::vector<std::pair<int, std::vector<int>>> curry_scan(const FiniteLattice& l) {
  ImplicativeReport impl = implicative_report(l);
  if (!impl.residuum) throw NotImplicative("lattice is not implicative");
  const ResiduumTable& t = *impl.residuum;
  std::vector<std::pair<int, std::vector<int>>> out;
  for (int y = 0; y < l.size(); ++y) {
    std::vector<int> fixed;
    for (int x = 0; x < l.size(); ++x)
      if (t.of(x, y) == x) fixed.push_back(x);
    out.emplace_back(y, std::move(fixed));
  }
  return out;
}

namespace {

void require_unit_interval(const Rational& x) {
  if (x < Rational(0) || x > Rational(1))
    throw OutOfRange("t-norm operand outside [0,1]: " + x.str());
}

}  // namespace

Rational tnorm_eval(TNormKind kind, const Rational& x, const Rational& y) {
  require_unit_interval(x);
  require_unit_interval(y);
  switch (kind) {
    case TNormKind::Lukasiewicz:
      return max(x + y - Rational(1), Rational(0));
    case TNormKind::Goedel:
      return min(x, y);
    case TNormKind::Product:
      return x * y;
  }
  throw BadParams("unknown t-norm kind");
}

Rational tnorm_residuum(TNormKind kind, const Rational& x, const Rational& y) {
  require_unit_interval(x);
  require_unit_interval(y);
  switch (kind) {
    case TNormKind::Lukasiewicz:
      return min(Rational(1) - x + y, Rational(1));
    case TNormKind::Goedel:
      return x <= y ? Rational(1) : y;
    case TNormKind::Product:
      return x <= y ? Rational(1) : y / x;
  }
  throw BadParams("unknown t-norm kind");
}

Rational tnorm_residuum_grid_sup(TNormKind kind, const Rational& x, const Rational& y,
                                 std::int64_t grid_den) {
  require_unit_interval(x);
  require_unit_interval(y);
  std::int64_t d = std::lcm(std::lcm(x.den(), y.den()), grid_den);
  Rational best(0);
  for (std::int64_t k = 0; k <= d; ++k) {
    Rational z(k, d);
    if (tnorm_eval(kind, x, z) <= y) best = z;  // t-norms are monotone in z
  }
  return best;
}

TNormLogic build_tnorm_logic(TNormKind kind, int n) {
  if (kind == TNormKind::Product)
    throw ProductNotClosed("the grid {0,1/n,..,1} is not closed under g/f");
  if (n < 1) throw BadParams("t-norm logic needs n >= 1");

  TNormLogic out;
  std::vector<std::string> labels;
  for (int i = 0; i <= n; ++i) {
    out.carrier.emplace_back(i, n);
    labels.push_back(out.carrier.back().str());
  }
  FiniteLattice chain = chain_lattice(n + 1, labels);

  auto index_of = [&](const Rational& r) {
    for (int i = 0; i <= n; ++i)
      if (out.carrier[i] == r) return i;
    throw ProductNotClosed("carrier not closed at " + r.str());
  };

  NegationMap neg;
  for (int i = 0; i <= n; ++i)
    neg.table.push_back(index_of(tnorm_residuum(kind, out.carrier[i], Rational(0))));

  out.fusion.assign((std::size_t)(n + 1) * (n + 1), -1);
  out.implication.n = n + 1;
  out.implication.arrow.assign((std::size_t)(n + 1) * (n + 1), -1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      out.fusion[(std::size_t)i * (n + 1) + j] =
          index_of(tnorm_eval(kind, out.carrier[i], out.carrier[j]));
      out.implication.arrow[(std::size_t)i * (n + 1) + j] =
          index_of(tnorm_residuum(kind, out.carrier[i], out.carrier[j]));
    }

  out.logic = LogicStructure(std::move(chain), std::move(neg));
  return out;
}

}  // namespace latkit
