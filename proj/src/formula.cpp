#include "latkit/formula.hpp"

#include <algorithm>
#include <cctype>

#include "latkit/scan.hpp"

namespace latkit {

FormulaPtr Formula::variable(std::string name) {
  auto f = std::make_shared<Formula>();
  f->kind = Connective::Var;
  f->var = std::move(name);
  return f;
}

FormulaPtr Formula::constant(bool top) {
  auto f = std::make_shared<Formula>();
  f->kind = top ? Connective::Top : Connective::Bottom;
  return f;
}

FormulaPtr Formula::make(Connective kind, FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->lhs = std::move(a);
  f->rhs = std::move(b);
  return f;
}

std::set<std::string> Formula::variables() const {
  std::set<std::string> out;
  if (kind == Connective::Var) out.insert(var);
  if (lhs)
    for (const auto& v : lhs->variables()) out.insert(v);
  if (rhs)
    for (const auto& v : rhs->variables()) out.insert(v);
  return out;
}

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  }
  bool eat(const std::string& tok) {
    skip_ws();
    if (text.compare(pos, tok.size(), tok) == 0) {
      // "-" of "->" must not swallow the arrow of "<->" handled by call order
      pos += tok.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw SyntaxError(msg + " at position " + std::to_string(pos));
  }

  FormulaPtr parse_iff() {
    FormulaPtr lhs = parse_imp();
    skip_ws();
    while (eat("<->")) {
      FormulaPtr rhs = parse_imp();
      lhs = Formula::make(Connective::Iff, lhs, rhs);
      skip_ws();
    }
    return lhs;
  }
  FormulaPtr parse_imp() {
    FormulaPtr lhs = parse_or();
    if (eat("->")) return Formula::make(Connective::Imp, lhs, parse_imp());
    return lhs;
  }
  FormulaPtr parse_or() {
    FormulaPtr lhs = parse_and();
    skip_ws();
    while (eat("|")) {
      lhs = Formula::make(Connective::Or, lhs, parse_and());
      skip_ws();
    }
    return lhs;
  }
  FormulaPtr parse_and() {
    FormulaPtr lhs = parse_unary();
    skip_ws();
    while (eat("&")) {
      lhs = Formula::make(Connective::And, lhs, parse_unary());
      skip_ws();
    }
    return lhs;
  }
  FormulaPtr parse_unary() {
    skip_ws();
    if (eat("~")) return Formula::make(Connective::Not, parse_unary());
    if (eat("(")) {
      FormulaPtr inner = parse_iff();
      if (!eat(")")) fail("expected ')'");
      return inner;
    }
    if (pos >= text.size()) fail("unexpected end of formula");
    char c = text[pos];
    if (c == '0') {
      ++pos;
      return Formula::constant(false);
    }
    if (c == '1') {
      ++pos;
      return Formula::constant(true);
    }
    if (std::isalpha((unsigned char)c) || c == '_') {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum((unsigned char)text[pos]) || text[pos] == '_'))
        ++pos;
      return Formula::variable(text.substr(start, pos - start));
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

int precedence(Connective k) {
  switch (k) {
    case Connective::Iff: return 1;
    case Connective::Imp: return 2;
    case Connective::Or: return 3;
    case Connective::And: return 4;
    case Connective::Not: return 5;
    default: return 6;
  }
}

std::string print_prec(const FormulaPtr& f, int parent) {
  int prec = precedence(f->kind);
  std::string body;
  switch (f->kind) {
    case Connective::Var: body = f->var; break;
    case Connective::Bottom: body = "0"; break;
    case Connective::Top: body = "1"; break;
    case Connective::Not: body = "~" + print_prec(f->lhs, prec); break;
    case Connective::And:
      body = print_prec(f->lhs, prec) + " & " + print_prec(f->rhs, prec + 1);
      break;
    case Connective::Or:
      body = print_prec(f->lhs, prec) + " | " + print_prec(f->rhs, prec + 1);
      break;
    case Connective::Imp:
      // right-associative
      body = print_prec(f->lhs, prec + 1) + " -> " + print_prec(f->rhs, prec);
      break;
    case Connective::Iff:
      body = print_prec(f->lhs, prec) + " <-> " + print_prec(f->rhs, prec + 1);
      break;
  }
  return prec < parent ? "(" + body + ")" : body;
}

}  // namespace

FormulaPtr parse(const std::string& text) {
  Parser p(text);
  FormulaPtr f = p.parse_iff();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return f;
}

std::string print(const FormulaPtr& f) { return print_prec(f, 0); }

ImplicationSemantics default_semantics(const LogicStructure& s) {
  ImplicativeReport impl = implicative_report(s.lattice);
  if (impl.residuum) return ImplicationSemantics::residuated(*impl.residuum);
  PropertyReport axioms = negation_axiom_report(s);
  if (axioms.holds("weak-double-negation") && axioms.holds("antitony") &&
      axioms.holds("boolean-boundary"))
    return ImplicationSemantics::ortho();
  throw SemanticsUnavailable("structure is neither implicative nor a fuzzy logic");
}

int eval(const FormulaPtr& f, const LogicStructure& s, const ImplicationSemantics& sem,
         const std::map<std::string, int>& env) {
  const FiniteLattice& l = s.lattice;
  auto arrow = [&](int a, int b) {
    switch (sem.kind) {
      case ImplicationSemantics::OrthoArrow: return l.join(s.neg.of(a), b);
      case ImplicationSemantics::ResiduatedArrow:
      case ImplicationSemantics::TableArrow:
        if (!sem.table || sem.table->n != l.size())
          throw SemanticsUnavailable("implication table missing or mismatched");
        return sem.table->of(a, b);
    }
    throw SemanticsUnavailable("unknown implication semantics");
  };
  switch (f->kind) {
    case Connective::Var: {
      auto it = env.find(f->var);
      if (it == env.end()) throw UnboundVariable("unbound variable: " + f->var);
      return it->second;
    }
    case Connective::Bottom: return l.bottom();
    case Connective::Top: return l.top();
    case Connective::Not: return s.neg.of(eval(f->lhs, s, sem, env));
    case Connective::And: return l.meet(eval(f->lhs, s, sem, env), eval(f->rhs, s, sem, env));
    case Connective::Or: return l.join(eval(f->lhs, s, sem, env), eval(f->rhs, s, sem, env));
    case Connective::Imp: return arrow(eval(f->lhs, s, sem, env), eval(f->rhs, s, sem, env));
    case Connective::Iff: {
      int a = eval(f->lhs, s, sem, env), b = eval(f->rhs, s, sem, env);
      return l.meet(arrow(a, b), arrow(b, a));
    }
  }
  throw SemanticsUnavailable("unknown connective");
}

namespace {

// Flat postfix program; the assignment loop in holds_identity is the hot path
// of every law check, so formulas are compiled once and run on a value stack.
struct Instr {
  Connective op;
  int slot;  // Var only
};

void compile(const FormulaPtr& f, const std::map<std::string, int>& slots,
             std::vector<Instr>& out) {
  if (f->lhs) compile(f->lhs, slots, out);
  if (f->rhs) compile(f->rhs, slots, out);
  out.push_back({f->kind, f->kind == Connective::Var ? slots.at(f->var) : -1});
}

int run(const std::vector<Instr>& prog, const LogicStructure& s,
        const ImplicationSemantics& sem, const std::vector<int>& env,
        std::vector<int>& stack) {
  const FiniteLattice& l = s.lattice;
  auto arrow = [&](int a, int b) {
    if (sem.kind == ImplicationSemantics::OrthoArrow) return l.join(s.neg.of(a), b);
    if (!sem.table || sem.table->n != l.size())
      throw SemanticsUnavailable("implication table missing or mismatched");
    return sem.table->of(a, b);
  };
  stack.clear();
  for (const Instr& ins : prog) {
    switch (ins.op) {
      case Connective::Var: stack.push_back(env[ins.slot]); break;
      case Connective::Bottom: stack.push_back(l.bottom()); break;
      case Connective::Top: stack.push_back(l.top()); break;
      case Connective::Not: stack.back() = s.neg.of(stack.back()); break;
      default: {
        int b = stack.back();
        stack.pop_back();
        int a = stack.back();
        switch (ins.op) {
          case Connective::And: stack.back() = l.meet(a, b); break;
          case Connective::Or: stack.back() = l.join(a, b); break;
          case Connective::Imp: stack.back() = arrow(a, b); break;
          case Connective::Iff: stack.back() = l.meet(arrow(a, b), arrow(b, a)); break;
          default: throw SemanticsUnavailable("unknown connective");
        }
      }
    }
  }
  return stack.back();
}

}  // namespace

IdentityResult holds_identity(const LogicStructure& s, const ImplicationSemantics& sem,
                              const FormulaPtr& lhs, const FormulaPtr& rhs) {
  std::set<std::string> var_set = lhs->variables();
  for (const auto& v : rhs->variables()) var_set.insert(v);
  std::vector<std::string> vars(var_set.begin(), var_set.end());  // sorted

  std::map<std::string, int> slots;
  for (std::size_t i = 0; i < vars.size(); ++i) slots[vars[i]] = (int)i;
  std::vector<Instr> prog_lhs, prog_rhs;
  compile(lhs, slots, prog_lhs);
  compile(rhs, slots, prog_rhs);

  int n = s.lattice.size();
  std::vector<int> digits(vars.size(), 0);
  std::vector<int> stack;
  while (true) {
    int a = run(prog_lhs, s, sem, digits, stack);
    int b = run(prog_rhs, s, sem, digits, stack);
    if (a != b) {
      IdentityResult out;
      out.holds = false;
      Witness w;
      for (std::size_t i = 0; i < vars.size(); ++i)
        w.elements.push_back(s.name(digits[i]));
      w.identity = print(lhs) + " = " + print(rhs);
      w.lhs = s.name(a);
      w.rhs = s.name(b);
      out.witness = std::move(w);
      return out;
    }
    // mixed-radix increment, last variable fastest
    std::size_t i = vars.size();
    while (i > 0) {
      if (++digits[i - 1] < n) break;
      digits[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
    if (vars.empty()) break;
  }
  return {};
}

bool boolean_tautology(const FormulaPtr& f) {
  std::set<std::string> var_set = f->variables();
  std::vector<std::string> vars(var_set.begin(), var_set.end());
  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << vars.size()); ++bits) {
    std::map<std::string, bool> env;
    for (std::size_t i = 0; i < vars.size(); ++i) env[vars[i]] = (bits >> i) & 1;
    // classical semantics on {0,1}
    auto rec = [&](auto&& self, const FormulaPtr& g) -> bool {
      switch (g->kind) {
        case Connective::Var: return env.at(g->var);
        case Connective::Bottom: return false;
        case Connective::Top: return true;
        case Connective::Not: return !self(self, g->lhs);
        case Connective::And: return self(self, g->lhs) && self(self, g->rhs);
        case Connective::Or: return self(self, g->lhs) || self(self, g->rhs);
        case Connective::Imp: return !self(self, g->lhs) || self(self, g->rhs);
        case Connective::Iff: return self(self, g->lhs) == self(self, g->rhs);
      }
      return false;
    };
    if (!rec(rec, f)) return false;
  }
  return true;
}

namespace {

using Antichain = std::vector<std::set<std::string>>;

// Remove supersets: S absorbs T when S is a subset of T.
Antichain reduce(Antichain sets) {
  Antichain out;
  for (const auto& s : sets) {
    bool absorbed = false;
    for (const auto& t : sets)
      if (t != s && std::includes(s.begin(), s.end(), t.begin(), t.end())) {
        absorbed = true;
        break;
      }
    if (!absorbed && std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return out;
}

Antichain cross(const Antichain& a, const Antichain& b) {
  Antichain out;
  for (const auto& s : a)
    for (const auto& t : b) {
      std::set<std::string> u = s;
      u.insert(t.begin(), t.end());
      out.push_back(std::move(u));
    }
  return reduce(out);
}

Antichain concat(Antichain a, const Antichain& b) {
  a.insert(a.end(), b.begin(), b.end());
  return reduce(std::move(a));
}

// In JoinOfMeets mode, Or unions the clause families and And crosses them;
// MeetOfJoins is the dual reading of the same recursion.
Antichain nf(const FormulaPtr& f, NormalFormMode mode) {
  switch (f->kind) {
    case Connective::Var: return {{f->var}};
    case Connective::And: {
      auto a = nf(f->lhs, mode), b = nf(f->rhs, mode);
      return mode == NormalFormMode::JoinOfMeets ? cross(a, b) : concat(a, b);
    }
    case Connective::Or: {
      auto a = nf(f->lhs, mode), b = nf(f->rhs, mode);
      return mode == NormalFormMode::JoinOfMeets ? concat(a, b) : cross(a, b);
    }
    default:
      throw UnsupportedConnective("normal_form handles variables, & and | only");
  }
}

}  // namespace

std::vector<std::set<std::string>> normal_form(const FormulaPtr& f, NormalFormMode mode) {
  return nf(f, mode);
}

}  // namespace latkit
