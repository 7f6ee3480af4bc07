#include "latkit/catalog.hpp"

#include <algorithm>
#include <cctype>

#include "latkit/scan.hpp"

namespace latkit {

namespace {

NegationMap negation_by_labels(const FiniteLattice& l,
                               const std::vector<std::pair<std::string, std::string>>& pairs) {
  NegationMap neg;
  neg.table.assign(l.size(), -1);
  for (const auto& [from, to] : pairs) {
    int i = l.index_of(from), j = l.index_of(to);
    if (i < 0 || j < 0) throw UnknownLabel("negation label missing: " + from + "/" + to);
    neg.table[i] = j;
  }
  for (int v : neg.table)
    if (v < 0) throw UnknownLabel("negation table incomplete");
  return neg;
}

ResiduumTable table_by_labels(const FiniteLattice& l,
                              const std::vector<std::vector<std::string>>& rows) {
  ResiduumTable t;
  t.n = l.size();
  for (const auto& row : rows)
    for (const auto& cell : row) {
      int idx = l.index_of(cell);
      if (idx < 0) throw UnknownLabel("table cell not in carrier: " + cell);
      t.arrow.push_back(idx);
    }
  if ((int)t.arrow.size() != t.n * t.n) throw BadParams("table shape mismatch");
  return t;
}

CatalogEntry entry_m5() {
  CatalogEntry e;
  e.name = "M5";
  e.lattice = pattern_lattice(SublatticePattern::M5);
  e.negation = negation_by_labels(
      e.lattice, {{"0", "1"}, {"a", "c"}, {"b", "0"}, {"c", "a"}, {"1", "0"}});
  e.expected = {{"fuzzy_negation", true}, {"non_contradictory", true},
                {"conj_de_morgan", false}, {"distributive", false},
                {"modular", true},        {"paraconsistent", false},
                {"orthomodular", false},  {"involutive", false}};
  e.expected_label = "logic";
  return e;
}

CatalogEntry entry_n5() {
  CatalogEntry e;
  e.name = "N5";
  e.lattice = pattern_lattice(SublatticePattern::N5);
  e.expected = {{"distributive", false}, {"modular", false}};
  return e;
}

CatalogEntry entry_o6() {
  CatalogEntry e;
  e.name = "O6";
  e.lattice = pattern_lattice(SublatticePattern::O6);
  e.negation = negation_by_labels(e.lattice, {{"0", "1"},
                                              {"x", "x'"},
                                              {"y", "y'"},
                                              {"y'", "y"},
                                              {"x'", "x"},
                                              {"1", "0"}});
  e.expected = {{"fuzzy_negation", true},  {"non_contradictory", true},
                {"complemented", true},    {"involutive", true},
                {"tertium", true},         {"orthomodular", false},
                {"paraconsistent", false}, {"distributive", false}};
  e.expected_label = "logic";
  return e;
}

// O6 with the join x' & y made positive; the labelled complement pairs then
// satisfy the orthomodular exchange at (x, y) and (y', x').
CatalogEntry entry_l7() {
  CatalogEntry e;
  e.name = "L7";
  e.lattice = lattice_from_poset(poset_from_covers({"0", "x", "m", "y'", "y", "x'", "1"},
                                                   {{"0", "x"},
                                                    {"0", "m"},
                                                    {"0", "y'"},
                                                    {"x", "y"},
                                                    {"m", "y"},
                                                    {"m", "x'"},
                                                    {"y'", "x'"},
                                                    {"y", "1"},
                                                    {"x'", "1"}}));
  e.expected = {{"distributive", false}, {"modular", false}};
  return e;
}

CatalogEntry entry_f2() {
  CatalogEntry e;
  e.name = "F2";
  e.lattice = lattice_from_poset(poset_from_covers(
      {"v", "x", "y", "u"}, {{"v", "x"}, {"v", "y"}, {"x", "u"}, {"y", "u"}}));
  e.expected = {{"distributive", true}, {"modular", true}};
  return e;
}

CatalogEntry entry_cube(int n, const std::string& display) {
  if (n < 1 || n > 6) throw BadParams("CUBE(n) supports n in 1..6");
  int count = 1 << n;
  std::vector<std::string> names;
  for (int m = 0; m < count; ++m) {
    std::string s;
    for (int bit = n - 1; bit >= 0; --bit) s += (m >> bit & 1) ? '1' : '0';
    names.push_back(s);
  }
  std::vector<uint8_t> leq((std::size_t)count * count, 0);
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j)
      leq[(std::size_t)i * count + j] = (i & ~j) == 0 ? 1 : 0;

  CatalogEntry e;
  e.name = display;
  e.lattice = lattice_from_poset(FinitePoset(names, std::move(leq)));
  NegationMap neg;
  for (int m = 0; m < count; ++m) neg.table.push_back(~m & (count - 1));
  e.negation = std::move(neg);
  e.expected = {{"boolean", true},       {"orthomodular", true},
                {"paraconsistent", true}, {"distributive", true},
                {"involutive", true},     {"tertium", true},
                {"non_contradictory", true}};
  e.expected_label = "Boolean logic";
  return e;
}

CatalogEntry entry_mo(int n, const std::string& display) {
  if (n < 1 || n > 64) throw BadParams("MO(n) supports n in 1..64");
  std::vector<FiniteLattice> blocks;
  for (int j = 1; j <= n; ++j) {
    std::string p = "p" + std::to_string(j);
    blocks.push_back(lattice_from_poset(poset_from_covers(
        {"0", p + "-", p + "+", "1"},
        {{"0", p + "-"}, {"0", p + "+"}, {p + "-", "1"}, {p + "+", "1"}})));
  }
  CatalogEntry e;
  e.name = display;
  e.lattice = horizontal_sum(blocks);
  std::vector<std::pair<std::string, std::string>> pairs{{"0", "1"}, {"1", "0"}};
  for (int j = 1; j <= n; ++j) {
    std::string p = "p" + std::to_string(j);
    pairs.emplace_back(p + "-", p + "+");
    pairs.emplace_back(p + "+", p + "-");
  }
  e.negation = negation_by_labels(e.lattice, pairs);
  e.expected = {{"orthomodular", true},      {"non_contradictory", true},
                {"paraconsistent", true},    {"involutive", true},
                {"tertium", true},           {"modular", true},
                {"distributive", n == 1},    {"boolean", n == 1}};
  e.expected_label = n == 1 ? "Boolean logic" : "quantum logic";
  return e;
}

FiniteLattice bn4_lattice() {
  return lattice_from_poset(poset_from_covers(
      {"f", "n", "b", "t"}, {{"f", "n"}, {"f", "b"}, {"n", "t"}, {"b", "t"}}));
}

CatalogEntry entry_bn4() {
  CatalogEntry e;
  e.name = "BN4";
  e.lattice = bn4_lattice();
  e.negation = negation_by_labels(e.lattice,
                                  {{"f", "t"}, {"n", "n"}, {"b", "b"}, {"t", "f"}});
  e.fusion = table_by_labels(e.lattice, {{"f", "f", "f", "f"},
                                         {"f", "f", "n", "n"},
                                         {"f", "n", "b", "t"},
                                         {"f", "n", "t", "t"}});
  e.implication = table_by_labels(e.lattice, {{"t", "t", "t", "t"},
                                              {"n", "t", "n", "t"},
                                              {"f", "n", "b", "t"},
                                              {"f", "n", "f", "t"}});
  e.expected = {{"fuzzy_negation", true}, {"non_contradictory", false},
                {"tertium", false},       {"involutive", true},
                {"conj_de_morgan", true}, {"paraconsistent", true},
                {"distributive", true},   {"boolean", false}};
  e.expected_label = "paraconsistent logic";
  return e;
}

CatalogEntry entry_mo1_named() {
  CatalogEntry e;
  e.name = "MO1";
  e.lattice = bn4_lattice();
  e.negation = negation_by_labels(e.lattice,
                                  {{"f", "t"}, {"n", "b"}, {"b", "n"}, {"t", "f"}});
  e.expected = {{"boolean", true}, {"orthomodular", true}, {"tertium", true},
                {"non_contradictory", true}, {"involutive", true}};
  e.expected_label = "Boolean logic";
  return e;
}

CatalogEntry entry_tnorm(TNormKind kind, int n, const std::string& display) {
  TNormLogic t = build_tnorm_logic(kind, n);
  CatalogEntry e;
  e.name = display;
  e.lattice = t.logic.lattice;
  e.negation = t.logic.neg;
  ResiduumTable fusion;
  fusion.n = n + 1;
  fusion.arrow = t.fusion;
  e.fusion = std::move(fusion);
  e.implication = t.implication;
  if (n == 1) {
    e.expected = {{"boolean", true}};
    e.expected_label = "Boolean logic";
  } else if (kind == TNormKind::Lukasiewicz) {
    e.expected = {{"fuzzy_negation", true},  {"non_contradictory", false},
                  {"tertium", false},        {"involutive", true},
                  {"conj_de_morgan", true},  {"paraconsistent", true},
                  {"distributive", true}};
    e.expected_label = "paraconsistent logic";
  } else {
    e.expected = {{"fuzzy_negation", true}, {"non_contradictory", true},
                  {"tertium", false},       {"involutive", false},
                  {"conj_de_morgan", true}, {"paraconsistent", false},
                  {"distributive", true},   {"intuitionistic", true}};
    e.expected_label = "intuitionistic logic";
  }
  return e;
}

CatalogEntry entry_rm(int k, const std::string& display) {
  if (k < 3 || k % 2 == 0) throw BadParams("RM wants an odd carrier size 2n+1 >= 3");
  int m = (k - 1) / 2;
  std::vector<std::string> labels;
  for (int a = -m; a <= m; ++a) labels.push_back(std::to_string(a));
  CatalogEntry e;
  e.name = display;
  e.lattice = chain_lattice(k, labels);
  auto idx = [&](int a) { return a + m; };
  NegationMap neg;
  neg.table.assign(k, -1);
  for (int a = -m; a <= m; ++a) neg.table[idx(a)] = idx(-a);
  e.negation = std::move(neg);
  ResiduumTable fusion, imp;
  fusion.n = imp.n = k;
  for (int a = -m; a <= m; ++a)
    for (int b = -m; b <= m; ++b) {
      fusion.arrow.push_back(idx(a <= -b ? std::min(a, b) : std::max(a, b)));
      imp.arrow.push_back(idx(a <= b ? std::max(-a, b) : std::min(-a, b)));
    }
  e.fusion = std::move(fusion);
  e.implication = std::move(imp);
  e.expected = {{"fuzzy_negation", true},  {"involutive", true},
                {"tertium", false},        {"non_contradictory", false},
                {"conj_de_morgan", true},  {"paraconsistent", true},
                {"distributive", true}};
  e.expected_label = "paraconsistent logic";
  return e;
}

CatalogEntry entry_g6() {
  CatalogEntry e;
  e.name = "G6";
  e.lattice = lattice_from_poset(poset_from_covers(
      {"0", "x", "y", "y'", "x'", "1"},
      {{"0", "x"}, {"x", "y"}, {"x", "y'"}, {"y", "x'"}, {"y'", "x'"}, {"x'", "1"}}));
  e.negation = negation_by_labels(e.lattice, {{"0", "1"},
                                              {"x", "x'"},
                                              {"y", "y'"},
                                              {"y'", "y"},
                                              {"x'", "x"},
                                              {"1", "0"}});
  e.expected = {{"fuzzy_negation", true},   {"paraconsistent", true},
                {"orthomodular", false},    {"involutive", true},
                {"non_contradictory", false}, {"tertium", false}};
  e.expected_label = "paraconsistent logic";
  return e;
}

CatalogEntry entry_g8() {
  CatalogEntry e;
  e.name = "G8";
  e.lattice = lattice_from_poset(poset_from_covers({"0", "f", "x", "y'", "y", "x'", "f'", "1"},
                                                   {{"0", "f"},
                                                    {"f", "x"},
                                                    {"f", "y'"},
                                                    {"x", "y"},
                                                    {"y'", "x'"},
                                                    {"y", "f'"},
                                                    {"x'", "f'"},
                                                    {"f'", "1"}}));
  e.negation = negation_by_labels(e.lattice, {{"0", "1"},
                                              {"f", "f'"},
                                              {"x", "x'"},
                                              {"y", "y'"},
                                              {"y'", "y"},
                                              {"x'", "x"},
                                              {"f'", "f"},
                                              {"1", "0"}});
  e.expected = {{"fuzzy_negation", true},   {"paraconsistent", true},
                {"orthomodular", false},    {"involutive", true},
                {"non_contradictory", false}, {"tertium", false}};
  e.expected_label = "paraconsistent logic";
  return e;
}

// Atoms a..e sit each under its own coatom, following the drawn verticals.
CatalogEntry entry_g14() {
  std::vector<std::string> names{"0", "f"};
  std::vector<std::pair<std::string, std::string>> covers{{"0", "f"}};
  std::vector<std::pair<std::string, std::string>> pairs{{"0", "1"}, {"1", "0"},
                                                         {"f", "f'"}, {"f'", "f"}};
  for (char c = 'a'; c <= 'e'; ++c) {
    std::string lo(1, c), hi = lo + "'";
    names.push_back(lo);
    names.push_back(hi);
    covers.emplace_back("f", lo);
    covers.emplace_back(lo, hi);
    covers.emplace_back(hi, "f'");
    pairs.emplace_back(lo, hi);
    pairs.emplace_back(hi, lo);
  }
  names.push_back("f'");
  names.push_back("1");
  covers.emplace_back("f'", "1");

  CatalogEntry e;
  e.name = "G14";
  e.lattice = lattice_from_poset(poset_from_covers(names, covers));
  e.negation = negation_by_labels(e.lattice, pairs);
  e.expected = {{"fuzzy_negation", true},   {"paraconsistent", true},
                {"orthomodular", false},    {"involutive", true},
                {"non_contradictory", false}, {"tertium", false}};
  e.expected_label = "paraconsistent logic";
  return e;
}

CatalogEntry entry_lstar_grid(int n, const std::string& display) {
  if (n < 1 || n > 16) throw BadParams("LSTAR_GRID(n) supports n in 1..16");
  std::vector<std::pair<int, int>> pts;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) pts.emplace_back(i, j);
  std::vector<std::string> names;
  for (auto [i, j] : pts)
    names.push_back("(" + Rational(i, n).str() + "," + Rational(j, n).str() + ")");
  int count = (int)pts.size();
  std::vector<uint8_t> leq((std::size_t)count * count, 0);
  for (int p = 0; p < count; ++p)
    for (int q = 0; q < count; ++q)
      leq[(std::size_t)p * count + q] =
          pts[p].first <= pts[q].first && pts[p].second >= pts[q].second ? 1 : 0;

  CatalogEntry e;
  e.name = display;
  e.lattice = lattice_from_poset(FinitePoset(names, std::move(leq)));
  NegationMap neg;
  for (auto [i, j] : pts) {
    auto it = std::find(pts.begin(), pts.end(), std::make_pair(j, i));
    neg.table.push_back((int)(it - pts.begin()));
  }
  e.negation = std::move(neg);
  e.expected = {{"fuzzy_negation", true},  {"distributive", true},
                {"involutive", true},      {"conj_de_morgan", true},
                {"non_contradictory", false}, {"tertium", false},
                {"paraconsistent", true}};
  e.expected_label = "paraconsistent logic";
  return e;
}

CatalogEntry entry_register2() {
  // Boolean 2^4 over the atoms p00, p01, p10, p11 with the register's
  // customary names for the rank-2 elements.
  const std::vector<std::string> atoms{"p00", "p01", "p10", "p11"};
  auto label = [&](int mask) -> std::string {
    switch (mask) {
      case 0b0000: return "0";
      case 0b1111: return "1";
      case 0b0011: return "u";  // p00 | p01
      case 0b0101: return "v";  // p00 | p10
      case 0b1001: return "w";  // p00 | p11
      case 0b0110: return "x";  // p01 | p10
      case 0b1010: return "y";  // p01 | p11
      case 0b1100: return "z";  // p10 | p11
      default: break;
    }
    for (int b = 0; b < 4; ++b)
      if (mask == 1 << b) return atoms[b];
    for (int b = 0; b < 4; ++b)
      if (mask == (0b1111 & ~(1 << b))) return atoms[b] + "'";
    throw BadParams("unreachable register label");
  };
  std::vector<std::string> names;
  for (int m = 0; m < 16; ++m) names.push_back(label(m));
  std::vector<uint8_t> leq(16 * 16, 0);
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) leq[(std::size_t)i * 16 + j] = (i & ~j) == 0 ? 1 : 0;
  CatalogEntry e;
  e.name = "REGISTER2";
  e.lattice = lattice_from_poset(FinitePoset(names, std::move(leq)));
  NegationMap neg;
  for (int m = 0; m < 16; ++m) neg.table.push_back(~m & 15);
  e.negation = std::move(neg);
  e.expected = {{"boolean", true}, {"orthomodular", true}, {"distributive", true}};
  e.expected_label = "Boolean logic";
  return e;
}

}  // namespace

CatalogEntry build(const std::string& name, const std::vector<int>& params) {
  std::string up;
  for (char c : name) up += (char)std::toupper((unsigned char)c);
  auto want_params = [&](std::size_t k) {
    if (params.size() != k)
      throw BadParams(up + " takes " + std::to_string(k) + " parameter(s)");
  };
  auto display = [&]() { return up + "(" + std::to_string(params[0]) + ")"; };

  if (up == "M5") { want_params(0); return entry_m5(); }
  if (up == "N5") { want_params(0); return entry_n5(); }
  if (up == "O6") { want_params(0); return entry_o6(); }
  if (up == "L7") { want_params(0); return entry_l7(); }
  if (up == "F2") { want_params(0); return entry_f2(); }
  if (up == "BN4") { want_params(0); return entry_bn4(); }
  if (up == "MO1") { want_params(0); return entry_mo1_named(); }
  if (up == "G6") { want_params(0); return entry_g6(); }
  if (up == "G8") { want_params(0); return entry_g8(); }
  if (up == "G14") { want_params(0); return entry_g14(); }
  if (up == "REGISTER2") { want_params(0); return entry_register2(); }
  if (up == "CUBE") { want_params(1); return entry_cube(params[0], display()); }
  if (up == "MO") { want_params(1); return entry_mo(params[0], display()); }
  if (up == "LUK") {
    want_params(1);
    return entry_tnorm(TNormKind::Lukasiewicz, params[0], display());
  }
  if (up == "GOEDEL") {
    want_params(1);
    return entry_tnorm(TNormKind::Goedel, params[0], display());
  }
  if (up == "RM") { want_params(1); return entry_rm(params[0], display()); }
  if (up == "LSTAR_GRID") { want_params(1); return entry_lstar_grid(params[0], display()); }
  throw UnknownName("unknown catalog name: " + name);
}

CatalogEntry build_by_name(const std::string& text) {
  std::size_t open = text.find('(');
  if (open == std::string::npos) return build(text, {});
  if (text.back() != ')') throw UnknownName("malformed catalog name: " + text);
  std::string base = text.substr(0, open);
  std::string arg = text.substr(open + 1, text.size() - open - 2);
  try {
    std::size_t used = 0;
    int k = std::stoi(arg, &used);
    if (used != arg.size()) throw BadParams("bad parameter: " + arg);
    return build(base, {k});
  } catch (const std::invalid_argument&) {
    throw BadParams("bad parameter: " + arg);
  } catch (const std::out_of_range&) {
    throw BadParams("parameter out of range: " + arg);
  }
}

std::vector<std::string> default_catalog_names() {
  std::vector<std::string> names{"M5", "N5", "O6", "L7", "F2", "BN4", "MO1",
                                 "G6", "G8", "G14", "REGISTER2"};
  for (int n = 1; n <= 4; ++n) names.push_back("CUBE(" + std::to_string(n) + ")");
  for (int n = 1; n <= 5; ++n) names.push_back("MO(" + std::to_string(n) + ")");
  for (int n : {1, 2, 4, 6}) names.push_back("LUK(" + std::to_string(n) + ")");
  for (int n : {1, 2, 4, 6}) names.push_back("GOEDEL(" + std::to_string(n) + ")");
  names.push_back("RM(3)");
  names.push_back("RM(5)");
  for (int n = 1; n <= 3; ++n) names.push_back("LSTAR_GRID(" + std::to_string(n) + ")");
  return names;
}

namespace {

void check_flag(SelftestResult& r, const std::string& flag, bool expected, bool actual) {
  if (expected != actual) {
    r.pass = false;
    r.diagnostics.push_back("flag " + flag + ": expected " +
                            (expected ? "true" : "false") + ", got " +
                            (actual ? "true" : "false"));
  }
}

void check_table(SelftestResult& r, const CatalogEntry& e, const std::string& which,
                 const ResiduumTable& actual,
                 const std::vector<std::vector<std::string>>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      int want = e.lattice.index_of(rows[i][j]);
      int got = actual.of((int)i, (int)j);
      if (want != got) {
        r.pass = false;
        r.diagnostics.push_back(which + "[" + e.lattice.name((int)i) + "][" +
                                e.lattice.name((int)j) + "] = " + e.lattice.name(got) +
                                ", expected " + rows[i][j]);
      }
    }
}

}  // namespace

std::vector<SelftestResult> catalog_selftest() {
  std::vector<SelftestResult> out;
  for (const std::string& name : default_catalog_names()) {
    SelftestResult r;
    r.name = name;
    CatalogEntry e = build_by_name(name);

    PropertyReport scan = property_scan(e.lattice);
    std::map<std::string, bool> actual{{"distributive", scan.holds("distributive")},
                                       {"modular", scan.holds("modular")}};
    if (e.negation) {
      LogicClass c = classify(e.structure());
      actual["fuzzy_negation"] = c.flags.fuzzy_negation;
      actual["non_contradictory"] = c.flags.non_contradictory;
      actual["paraconsistent"] = c.flags.paraconsistent;
      actual["orthomodular"] = c.flags.orthomodular;
      actual["involutive"] = c.flags.involutive;
      actual["tertium"] = c.flags.tertium;
      actual["conj_de_morgan"] = c.flags.conj_de_morgan;
      actual["complemented"] = c.flags.complemented;
      actual["boolean"] = c.flags.boolean;
      actual["intuitionistic"] = c.flags.intuitionistic;
      if (e.expected_label && c.label != *e.expected_label) {
        r.pass = false;
        r.diagnostics.push_back("label: expected '" + *e.expected_label + "', got '" +
                                c.label + "'");
      }
    }
    for (const auto& [flag, want] : e.expected) {
      auto it = actual.find(flag);
      if (it == actual.end()) {
        r.pass = false;
        r.diagnostics.push_back("flag " + flag + " not computable");
      } else {
        check_flag(r, flag, want, it->second);
      }
    }

    // Frozen tables for the three-valued logics and BN4.
    if (name == "LUK(2)") {
      check_table(r, e, "fusion", *e.fusion,
                  {{"0", "0", "0"}, {"0", "0", "1/2"}, {"0", "1/2", "1"}});
      check_table(r, e, "implication", *e.implication,
                  {{"1", "1", "1"}, {"1/2", "1", "1"}, {"0", "1/2", "1"}});
    }
    if (name == "GOEDEL(2)") {
      check_table(r, e, "fusion", *e.fusion,
                  {{"0", "0", "0"}, {"0", "1/2", "1/2"}, {"0", "1/2", "1"}});
      check_table(r, e, "implication", *e.implication,
                  {{"1", "1", "1"}, {"0", "1", "1"}, {"0", "1/2", "1"}});
      // the Goedel residuum-derived fusion equals the lattice meet
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (e.fusion->of(i, j) != e.lattice.meet(i, j)) {
            r.pass = false;
            r.diagnostics.push_back("Goedel fusion differs from meet");
          }
    }
    if (name == "RM(3)") {
      check_table(r, e, "fusion", *e.fusion,
                  {{"-1", "-1", "-1"}, {"-1", "0", "1"}, {"-1", "1", "1"}});
      check_table(r, e, "implication", *e.implication,
                  {{"1", "1", "1"}, {"-1", "0", "1"}, {"-1", "-1", "1"}});
    }
    if (name == "BN4") {
      int b = e.lattice.index_of("b");
      if (e.lattice.meet(b, e.negation->of(b)) != b ||
          e.lattice.join(b, e.negation->of(b)) != b) {
        r.pass = false;
        r.diagnostics.push_back("BN4: b & b~ or b | b~ differs from b");
      }
    }
    if (name == "L7") {
      // orthomodular exchange for the labelled pairs, repaired w.r.t. O6
      const FiniteLattice& l = e.lattice;
      int x = l.index_of("x"), y = l.index_of("y"), xp = l.index_of("x'"),
          yp = l.index_of("y'");
      if (l.join(x, l.meet(xp, y)) != y || l.join(yp, l.meet(y, xp)) != xp) {
        r.pass = false;
        r.diagnostics.push_back("L7: orthomodular exchange at the labelled pairs failed");
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace latkit
