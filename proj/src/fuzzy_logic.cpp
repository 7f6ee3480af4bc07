#include "latkit/fuzzy_logic.hpp"

namespace latkit {

namespace {

std::string wrap(const std::string& label) {
  for (char c : label)
    if (c == '&' || c == '|') return "(" + label + ")";
  return label;
}

}  // namespace

FunctionLogic closure_lattice(const std::vector<PiecewiseLinear>& generators,
                              const std::vector<std::string>& generator_names,
                              std::size_t budget) {
  if (generators.empty()) throw OutOfRange("closure_lattice needs generators");
  if (!generator_names.empty() && generator_names.size() != generators.size())
    throw OutOfRange("generator name count mismatch");

  FunctionLogic out;
  auto insert = [&](const PiecewiseLinear& f, const std::string& label) {
    if (out.index_of(f) >= 0) return false;
    if (out.elements.size() >= budget)
      throw ClosureBudgetExceeded("function closure exceeded " + std::to_string(budget) +
                                  " elements");
    out.elements.push_back(f);
    out.labels.push_back(label);
    return true;
  };

  insert(PiecewiseLinear::constant(Rational(0)), "0");
  insert(PiecewiseLinear::constant(Rational(1)), "1");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    std::string name = generator_names.empty() ? "g" + std::to_string(i)
                                               : generator_names[i];
    insert(generators[i], name);
  }

  // Breadth-first rounds: negations first, then all ordered pairs, repeated
  // until nothing new appears.
  bool grew = true;
  while (grew) {
    grew = false;
    std::size_t snapshot = out.elements.size();
    for (std::size_t i = 0; i < snapshot; ++i)
      grew |= insert(pwl_luk_neg(out.elements[i]), "~" + wrap(out.labels[i]));
    for (std::size_t i = 0; i < snapshot; ++i)
      for (std::size_t j = i + 1; j < snapshot; ++j) {
        std::string a = wrap(out.labels[i]), b = wrap(out.labels[j]);
        grew |= insert(pwl_min(out.elements[i], out.elements[j]), a + "&" + b);
        grew |= insert(pwl_max(out.elements[i], out.elements[j]), a + "|" + b);
      }
  }

  int n = (int)out.elements.size();
  std::vector<uint8_t> leq((std::size_t)n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      leq[(std::size_t)i * n + j] = pwl_leq(out.elements[i], out.elements[j]) ? 1 : 0;
  FinitePoset poset(out.labels, std::move(leq));
  FiniteLattice lattice = lattice_from_poset(poset);

  NegationMap neg;
  for (int i = 0; i < n; ++i) {
    int img = out.index_of(pwl_luk_neg(out.elements[i]));
    if (img < 0) throw ClosureBudgetExceeded("closure not negation-closed");
    neg.table.push_back(img);
  }
  out.structure = LogicStructure(std::move(lattice), std::move(neg));
  return out;
}

TemperatureGenerators temperature_generators() {
  PiecewiseLinear a({{Rational(5), Rational(1)}, {Rational(15), Rational(0)}});
  PiecewiseLinear b({{Rational(5), Rational(0)},
                     {Rational(15), Rational(1)},
                     {Rational(25), Rational(1)},
                     {Rational(35), Rational(0)}});
  PiecewiseLinear c({{Rational(25), Rational(0)}, {Rational(35), Rational(1)}});
  return {a, b, c};
}

}  // namespace latkit
