#include "latkit/json_io.hpp"

#include <set>

namespace latkit {

using nlohmann::json;

LoadedLattice lattice_from_json(const json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("covers"))
    throw IoError("lattice JSON needs \"elements\" and \"covers\"");
  std::vector<std::string> names;
  for (const auto& e : j.at("elements")) {
    if (!e.is_string()) throw IoError("element names must be strings");
    names.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> covers;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& c : j.at("covers")) {
    if (!c.is_array() || c.size() != 2)
      throw IoError("covers must be two-element arrays");
    std::pair<std::string, std::string> cover{c[0].get<std::string>(),
                                              c[1].get<std::string>()};
    if (!seen.insert(cover).second)
      throw DuplicateCover("duplicate cover " + cover.first + " -> " + cover.second);
    covers.push_back(std::move(cover));
  }

  LoadedLattice out;
  out.lattice = lattice_from_poset(poset_from_covers(names, covers));
  if (j.contains("negation")) {
    const auto& neg = j.at("negation");
    if (!neg.is_array() || neg.size() != names.size())
      throw IoError("negation must list one name per element");
    NegationMap map;
    for (const auto& e : neg) {
      int idx = out.lattice.index_of(e.get<std::string>());
      if (idx < 0) throw UnknownLabel("negation names unknown element " + e.dump());
      map.table.push_back(idx);
    }
    out.negation = std::move(map);
  }
  return out;
}

LoadedLattice lattice_from_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw IoError("input is not valid JSON");
  return lattice_from_json(j);
}

json lattice_to_json(const FiniteLattice& l, const NegationMap* neg) {
  json j;
  j["elements"] = json::array();
  for (int i = 0; i < l.size(); ++i) j["elements"].push_back(l.name(i));
  j["covers"] = json::array();
  for (auto [lo, hi] : l.poset().covers())
    j["covers"].push_back(json::array({l.name(lo), l.name(hi)}));
  if (neg) {
    j["negation"] = json::array();
    for (int i = 0; i < l.size(); ++i) j["negation"].push_back(l.name(neg->of(i)));
  }
  return j;
}

json to_json(const Witness& w) {
  return json{{"elements", w.elements}, {"identity", w.identity},
              {"lhs", w.lhs},           {"rhs", w.rhs}};
}

json to_json(const PropertyVerdict& v) {
  json j{{"property", v.property}, {"holds", v.holds}};
  j["witness"] = v.witness ? json(v.witness->elements) : json(nullptr);
  if (v.witness) j["counterexample"] = to_json(*v.witness);
  return j;
}

json to_json(const PropertyReport& r) {
  json j = json::array();
  for (const auto& v : r.verdicts()) j.push_back(to_json(v));
  return j;
}

json to_json(const PiecewiseLinear& f) {
  json j = json::array();
  for (const auto& p : f.breakpoints()) j.push_back(json::array({p.x.str(), p.y.str()}));
  return j;
}

PiecewiseLinear pwl_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw IoError("piecewise-linear JSON must be an array");
  std::vector<PiecewiseLinear::Point> pts;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2)
      throw IoError("breakpoints are [\"p/q\", \"r/s\"] pairs");
    pts.push_back({Rational::parse(p[0].get<std::string>()),
                   Rational::parse(p[1].get<std::string>())});
  }
  return PiecewiseLinear(std::move(pts));
}

json to_json(const Effect2& e) {
  return json{{"a11", e.a11.str()}, {"a12", e.a12.str()}, {"a22", e.a22.str()}};
}

Effect2 effect_from_json(const json& j) {
  if (!j.is_object()) throw IoError("effect JSON must be an object");
  return Effect2{Rational::parse(j.at("a11").get<std::string>()),
                 Rational::parse(j.at("a12").get<std::string>()),
                 Rational::parse(j.at("a22").get<std::string>())};
}

json to_json(const LogicClass& c) {
  json flags{{"fuzzy_negation", c.flags.fuzzy_negation},
             {"non_contradictory", c.flags.non_contradictory},
             {"paraconsistent", c.flags.paraconsistent},
             {"orthomodular", c.flags.orthomodular},
             {"distributive", c.flags.distributive},
             {"involutive", c.flags.involutive},
             {"tertium", c.flags.tertium},
             {"conj_de_morgan", c.flags.conj_de_morgan},
             {"complemented", c.flags.complemented},
             {"boolean", c.flags.boolean},
             {"intuitionistic", c.flags.intuitionistic}};
  return json{{"flags", flags}, {"label", c.label}};
}

}  // namespace latkit
