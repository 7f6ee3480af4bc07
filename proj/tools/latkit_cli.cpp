// latkit -- command-line front end: build or load finite logics, run the law
// reports, classify, residuate, decompose, complete, and export DOT/JSON.
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "latkit/catalog.hpp"
#include "latkit/dot.hpp"
#include "latkit/errors.hpp"
#include "latkit/formula.hpp"
#include "latkit/fuzzy_logic.hpp"
#include "latkit/json_io.hpp"
#include "latkit/metaproperty.hpp"
#include "latkit/quantum.hpp"
#include "latkit/residuation.hpp"
#include "latkit/scan.hpp"

using nlohmann::json;
using namespace latkit;

namespace {

struct Loaded {
  std::string name;
  FiniteLattice lattice;
  std::optional<NegationMap> negation;
};

Loaded load_structure(const std::string& catalog_name, const std::string& file,
                      std::size_t closure_budget = 4096) {
  if (!catalog_name.empty() && !file.empty())
    throw IoError("give either --catalog or --file, not both");
  if (!catalog_name.empty()) {
    if (catalog_name == "temperature") {
      TemperatureGenerators g = temperature_generators();
      FunctionLogic logic =
          closure_lattice({g.a, g.b, g.c}, {"a", "b", "c"}, closure_budget);
      return {"temperature", logic.structure.lattice, logic.structure.neg};
    }
    CatalogEntry e = build_by_name(catalog_name);
    return {e.name, e.lattice, e.negation};
  }
  if (file.empty()) throw IoError("need --catalog NAME or --file PATH");
  std::ifstream in(file);
  if (!in) throw IoError("cannot open " + file);
  std::stringstream buf;
  buf << in.rdbuf();
  LoadedLattice loaded = lattice_from_json_text(buf.str());
  return {file, loaded.lattice, loaded.negation};
}

LogicStructure require_logic(const Loaded& l) {
  if (!l.negation)
    throw SemanticsUnavailable(l.name + " carries no negation table");
  return LogicStructure(l.lattice, *l.negation);
}

void print_verdict(std::ostream& out, const PropertyVerdict& v) {
  out << (v.holds ? "holds " : "FAILS ") << v.property;
  if (v.witness) {
    out << "  at (";
    for (std::size_t i = 0; i < v.witness->elements.size(); ++i)
      out << (i ? ", " : "") << v.witness->elements[i];
    out << "): " << v.witness->identity << " gives " << v.witness->lhs
        << " != " << v.witness->rhs;
  }
  out << "\n";
}

PropertyReport full_report(const Loaded& l) {
  PropertyReport all = property_scan(l.lattice);
  if (l.negation) {
    LogicStructure s = require_logic(l);
    PropertyReport axioms = negation_axiom_report(s);
    PropertyReport laws = law_report(s);
    for (const auto& v : axioms.verdicts()) all.add(v);
    for (const auto& v : laws.verdicts()) all.add(v);
  }
  return all;
}

void print_table(std::ostream& out, const FiniteLattice& l, const ResiduumTable& t,
                 const std::string& op) {
  std::size_t width = op.size();
  for (int i = 0; i < l.size(); ++i) width = std::max(width, l.name(i).size());
  auto cell = [&](const std::string& s) {
    out << std::setw((int)width + 2) << s;
  };
  cell(op);
  for (int j = 0; j < l.size(); ++j) cell(l.name(j));
  out << "\n";
  for (int i = 0; i < l.size(); ++i) {
    cell(l.name(i));
    for (int j = 0; j < l.size(); ++j) cell(l.name(t.of(i, j)));
    out << "\n";
  }
}

json table_to_json(const FiniteLattice& l, const ResiduumTable& t) {
  json rows = json::array();
  for (int i = 0; i < l.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < l.size(); ++j) row.push_back(l.name(t.of(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::map<std::string, int> parse_env(const FiniteLattice& l,
                                     const std::vector<std::string>& bindings) {
  std::map<std::string, int> env;
  for (const auto& b : bindings) {
    std::size_t eq = b.find('=');
    if (eq == std::string::npos) throw IoError("binding must look like var=element");
    std::string var = b.substr(0, eq), label = b.substr(eq + 1);
    int idx = l.index_of(label);
    if (idx < 0) throw UnknownLabel("no element named " + label);
    env[var] = idx;
  }
  return env;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite lattices, negations, and the hierarchy of logics"};
  app.require_subcommand(1);
  // let --json / --budget appear after the subcommand as well
  app.fallthrough();

  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string catalog_name, file;
  auto add_source = [&](CLI::App* cmd) {
    cmd->add_option("--catalog", catalog_name,
                    "catalog entry, e.g. M5, MO(3), LUK(2), temperature");
    cmd->add_option("--file", file, "lattice JSON file");
  };

  auto* cmd_catalog = app.add_subcommand("catalog", "list, show or export entries");
  bool list_entries = false;
  std::string show_name, export_name;
  cmd_catalog->add_flag("--list", list_entries, "list the built-in entries");
  cmd_catalog->add_option("--show", show_name, "print a summary of one entry");
  cmd_catalog->add_option("--export", export_name, "print an entry as lattice JSON");

  auto* cmd_check = app.add_subcommand("check", "evaluate law/property verdicts");
  add_source(cmd_check);
  std::vector<std::string> properties;
  bool assert_mode = false;
  cmd_check->add_option("--property", properties, "property name (repeatable)");
  cmd_check->add_flag("--assert", assert_mode, "exit 1 when a checked property fails");

  auto* cmd_classify = app.add_subcommand("classify", "hierarchy label and flags");
  add_source(cmd_classify);

  auto* cmd_residuum = app.add_subcommand("residuum", "relative pseudocomplement table");
  add_source(cmd_residuum);

  auto* cmd_tnorm = app.add_subcommand("tnorm", "t-norm tables or pointwise values");
  std::string kind_name = "lukasiewicz";
  int tnorm_n = 0;
  std::string x_text, y_text;
  cmd_tnorm->add_option("--kind", kind_name, "lukasiewicz | goedel | product");
  cmd_tnorm->add_option("--n", tnorm_n, "build the finite logic on {0,1/n,..,1}");
  cmd_tnorm->add_option("--x", x_text, "rational operand p/q");
  cmd_tnorm->add_option("--y", y_text, "rational operand p/q");

  auto* cmd_eval = app.add_subcommand("eval", "evaluate a formula on a structure");
  add_source(cmd_eval);
  std::string formula_text, equals_text, semantics_name = "default";
  std::vector<std::string> bindings;
  cmd_eval->add_option("--formula", formula_text, "formula, e.g. \"~x | y\"")->required();
  cmd_eval->add_option("--equals", equals_text, "check identity against this formula");
  cmd_eval->add_option("--env", bindings, "variable binding var=element (repeatable)");
  cmd_eval->add_option("--semantics", semantics_name, "default | ortho | residuated");
  cmd_eval->add_flag("--assert", assert_mode, "exit 1 when the identity fails");

  auto* cmd_decompose = app.add_subcommand("decompose", "compatible decomposition");
  add_source(cmd_decompose);
  std::string x_label, y_label;
  cmd_decompose->add_option("--x", x_label)->required();
  cmd_decompose->add_option("--y", y_label)->required();

  auto* cmd_macneille = app.add_subcommand("macneille", "MacNeille completion");
  add_source(cmd_macneille);
  bool use_effects = false;
  bool emit_dot = false;
  cmd_macneille->add_flag("--effects", use_effects, "complete the effects-abcd fixture");
  cmd_macneille->add_flag("--dot", emit_dot, "emit the completed lattice as DOT");

  auto* cmd_render = app.add_subcommand("render", "emit a Hasse diagram as DOT");
  add_source(cmd_render);
  cmd_render->add_flag("--dot", emit_dot, "emit DOT (the default)");

  auto* cmd_selftest = app.add_subcommand("selftest", "catalog and metaproperty checks");
  std::uint64_t seed = 0;
  int sweep_trials = 200;
  cmd_selftest->add_option("--seed", seed, "random seed (default 0)");
  cmd_selftest->add_option("--trials", sweep_trials,
                           "random negation tables per lattice (default 200)");

  std::uint64_t budget = 0;  // 0 = module defaults (5e7 search, 4096 closure)
  app.add_option("--budget", budget, "sublattice search / closure budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2, --help stays 0
  }

  try {
    if (cmd_catalog->parsed()) {
      if (list_entries) {
        json names = json::array();
        for (const auto& n : default_catalog_names()) {
          if (as_json)
            names.push_back(n);
          else
            std::cout << n << "\n";
        }
        if (as_json) std::cout << names.dump(2) << "\n";
      } else if (!show_name.empty()) {
        Loaded l = load_structure(show_name, "");
        json j{{"name", l.name}, {"elements", l.lattice.size()}};
        if (l.negation) j["class"] = to_json(classify(require_logic(l)));
        if (as_json)
          std::cout << j.dump(2) << "\n";
        else {
          std::cout << l.name << ": " << l.lattice.size() << " elements";
          if (l.negation)
            std::cout << ", " << classify(require_logic(l)).label;
          std::cout << "\n";
        }
      } else if (!export_name.empty()) {
        if (export_name == "effects-abcd") {
          EffectFixture fx = effects_fixture();
          json effects = json::array();
          for (std::size_t i = 0; i < fx.effects.size(); ++i) {
            json e = to_json(fx.effects[i]);
            e["name"] = fx.names[i];
            effects.push_back(e);
          }
          std::cout << json{{"effects", effects}}.dump(2) << "\n";
          return 0;
        }
        Loaded l = load_structure(export_name, "", budget ? budget : 4096);
        json j = lattice_to_json(l.lattice, l.negation ? &*l.negation : nullptr);
        if (export_name == "temperature") {
          TemperatureGenerators g = temperature_generators();
          FunctionLogic logic = closure_lattice({g.a, g.b, g.c}, {"a", "b", "c"});
          json fns = json::array();
          for (const auto& f : logic.elements) fns.push_back(to_json(f));
          j["functions"] = fns;
        }
        std::cout << j.dump(2) << "\n";
      } else {
        throw IoError("catalog wants --list, --show NAME or --export NAME");
      }
      return 0;
    }

    if (cmd_check->parsed()) {
      Loaded l = load_structure(catalog_name, file, budget ? budget : 4096);
      PropertyReport all = full_report(l);
      bool failed = false;
      json out = json::array();
      auto emit = [&](const PropertyVerdict& v) {
        if (!v.holds) failed = true;
        if (as_json)
          out.push_back(to_json(v));
        else
          print_verdict(std::cout, v);
      };
      auto sublattice_verdict = [&](SublatticePattern pat, const std::string& prop) {
        PropertyVerdict v{prop, true, std::nullopt};
        if (auto emb = find_forbidden_sublattice(l.lattice, pat, budget ? budget : 50000000)) {
          v.holds = false;
          Witness w;
          for (int idx : *emb) w.elements.push_back(l.lattice.name(idx));
          w.identity = "sublattice embedding";
          w.lhs = w.elements.front();
          w.rhs = w.elements.back();
          v.witness = std::move(w);
        }
        return v;
      };
      if (properties.empty())
        for (const auto& v : all.verdicts()) emit(v);
      else
        for (const auto& p : properties) {
          if (p == "no-m5-sublattice")
            emit(sublattice_verdict(SublatticePattern::M5, p));
          else if (p == "no-n5-sublattice")
            emit(sublattice_verdict(SublatticePattern::N5, p));
          else if (p == "no-o6-sublattice")
            emit(sublattice_verdict(SublatticePattern::O6, p));
          else
            emit(all.at(p));
        }
      if (as_json) std::cout << out.dump(2) << "\n";
      return assert_mode && failed ? 1 : 0;
    }

    if (cmd_classify->parsed()) {
      Loaded l = load_structure(catalog_name, file, budget ? budget : 4096);
      LogicClass c = classify(require_logic(l));
      if (as_json)
        std::cout << to_json(c).dump(2) << "\n";
      else {
        std::cout << l.name << ": " << c.label << "\n";
        json flags = to_json(c)["flags"];
        for (auto it = flags.begin(); it != flags.end(); ++it)
          std::cout << "  " << it.key() << " = " << (it.value().get<bool>() ? "yes" : "no")
                    << "\n";
      }
      return 0;
    }

    if (cmd_residuum->parsed()) {
      Loaded l = load_structure(catalog_name, file, budget ? budget : 4096);
      ImplicativeReport rep = implicative_report(l.lattice);
      if (as_json) {
        json j{{"implicative", rep.report.holds("implicative")}};
        j["report"] = to_json(rep.report);
        if (rep.residuum) j["arrow"] = table_to_json(l.lattice, *rep.residuum);
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& v : rep.report.verdicts()) print_verdict(std::cout, v);
        if (rep.residuum) print_table(std::cout, l.lattice, *rep.residuum, "->");
      }
      return 0;
    }

    if (cmd_tnorm->parsed()) {
      TNormKind kind;
      if (kind_name == "lukasiewicz" || kind_name == "luk")
        kind = TNormKind::Lukasiewicz;
      else if (kind_name == "goedel" || kind_name == "godel")
        kind = TNormKind::Goedel;
      else if (kind_name == "product")
        kind = TNormKind::Product;
      else
        throw BadParams("unknown t-norm kind: " + kind_name);

      if (!x_text.empty() || !y_text.empty()) {
        Rational x = Rational::parse(x_text), y = Rational::parse(y_text);
        Rational fusion = tnorm_eval(kind, x, y), residuum = tnorm_residuum(kind, x, y);
        if (as_json)
          std::cout << json{{"fusion", fusion.str()}, {"residuum", residuum.str()}}.dump(2)
                    << "\n";
        else
          std::cout << x.str() << " * " << y.str() << " = " << fusion.str() << "\n"
                    << x.str() << " -> " << y.str() << " = " << residuum.str() << "\n";
        return 0;
      }
      if (tnorm_n < 1) throw BadParams("tnorm wants --n N or --x/--y");
      TNormLogic t = build_tnorm_logic(kind, tnorm_n);
      ResiduumTable fusion{(int)t.carrier.size(), t.fusion};
      const FiniteLattice& l = t.logic.lattice;
      if (as_json) {
        json neg = json::array();
        for (int i = 0; i < l.size(); ++i) neg.push_back(l.name(t.logic.neg.of(i)));
        std::cout << json{{"carrier", json::parse(lattice_to_json(l).at("elements").dump())},
                          {"fusion", table_to_json(l, fusion)},
                          {"implication", table_to_json(l, t.implication)},
                          {"negation", neg}}
                         .dump(2)
                  << "\n";
      } else {
        print_table(std::cout, l, fusion, "*");
        std::cout << "\n";
        print_table(std::cout, l, t.implication, "->");
        std::cout << "\nnegation:";
        for (int i = 0; i < l.size(); ++i)
          std::cout << " " << l.name(i) << "'=" << l.name(t.logic.neg.of(i));
        std::cout << "\n";
      }
      return 0;
    }

    if (cmd_eval->parsed()) {
      Loaded l = load_structure(catalog_name, file, budget ? budget : 4096);
      LogicStructure s = require_logic(l);
      ImplicationSemantics sem = semantics_name == "ortho" ? ImplicationSemantics::ortho()
                                 : semantics_name == "residuated"
                                     ? [&] {
                                         ImplicativeReport rep = implicative_report(s.lattice);
                                         if (!rep.residuum)
                                           throw NotImplicative("lattice is not implicative");
                                         return ImplicationSemantics::residuated(*rep.residuum);
                                       }()
                                     : default_semantics(s);
      FormulaPtr f = parse(formula_text);
      if (!equals_text.empty()) {
        IdentityResult r = holds_identity(s, sem, f, parse(equals_text));
        if (as_json) {
          json j{{"holds", r.holds}};
          if (r.witness) j["witness"] = to_json(*r.witness);
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << (r.holds ? "identity holds\n" : "identity FAILS");
          if (r.witness) {
            std::cout << " at (";
            for (std::size_t i = 0; i < r.witness->elements.size(); ++i)
              std::cout << (i ? ", " : "") << r.witness->elements[i];
            std::cout << "): " << r.witness->lhs << " != " << r.witness->rhs << "\n";
          }
        }
        return assert_mode && !r.holds ? 1 : 0;
      }
      int value = eval(f, s, sem, parse_env(s.lattice, bindings));
      if (as_json)
        std::cout << json{{"value", s.name(value)}}.dump(2) << "\n";
      else
        std::cout << print(f) << " = " << s.name(value) << "\n";
      return 0;
    }

    if (cmd_decompose->parsed()) {
      Loaded l = load_structure(catalog_name, file, budget ? budget : 4096);
      LogicStructure s = require_logic(l);
      int x = s.lattice.index_of(x_label), y = s.lattice.index_of(y_label);
      if (x < 0 || y < 0) throw UnknownLabel("unknown element label");
      auto d = compatible_decomposition(s, x, y);
      if (as_json) {
        json j{{"compatible", d.has_value()}};
        if (d)
          j["decomposition"] = {{"u", s.name(d->u)}, {"v", s.name(d->v)}, {"w", s.name(d->w)}};
        std::cout << j.dump(2) << "\n";
      } else if (d) {
        std::cout << "compatible: u = " << s.name(d->u) << ", v = " << s.name(d->v)
                  << ", w = " << s.name(d->w) << "\n";
      } else {
        std::cout << x_label << " and " << y_label << " are incompatible\n";
      }
      return 0;
    }

    if (cmd_macneille->parsed()) {
      InvolutedPoset input;
      if (catalog_name == "effects-abcd") use_effects = true;
      if (use_effects) {
        EffectFixture fx = effects_fixture();
        input.poset = fx.poset;
        input.inv.table = fx.involution;
      } else {
        Loaded l = load_structure(catalog_name, file, budget ? budget : 4096);
        if (!l.negation) throw InvolutionViolated("MacNeille input needs a negation");
        input.poset = l.lattice.poset();
        input.inv = *l.negation;
      }
      LogicStructure mc = macneille_completion(input);
      if (emit_dot) {
        std::cout << render_dot(mc.lattice, &mc.neg);
        return 0;
      }
      if (as_json) {
        json j = lattice_to_json(mc.lattice, &mc.neg);
        j["class"] = to_json(classify(mc));
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "completion has " << mc.lattice.size() << " cuts, "
                  << classify(mc).label << "\n";
      }
      return 0;
    }

    if (cmd_render->parsed()) {
      Loaded l = load_structure(catalog_name, file, budget ? budget : 4096);
      std::cout << render_dot(l.lattice, l.negation ? &*l.negation : nullptr);
      return 0;
    }

    if (cmd_selftest->parsed()) {
      bool all_pass = true;
      json out = json::array();
      for (const auto& r : catalog_selftest()) {
        all_pass &= r.pass;
        if (as_json) {
          out.push_back(json{{"name", r.name}, {"pass", r.pass}, {"diagnostics", r.diagnostics}});
        } else {
          std::cout << (r.pass ? "pass " : "FAIL ") << r.name << "\n";
          for (const auto& d : r.diagnostics) std::cout << "     " << d << "\n";
        }
      }
      if (sweep_trials > 0) {
        for (const auto& name : default_catalog_names()) {
          CatalogEntry e = build_by_name(name);
          if (e.lattice.size() > 64) continue;
          auto violations = metaproperty_sweep(e.lattice, e.name, sweep_trials, seed);
          all_pass &= violations.empty();
          if (as_json) {
            out.push_back(json{{"name", "sweep " + name}, {"pass", violations.empty()},
                               {"diagnostics", violations}});
          } else {
            std::cout << (violations.empty() ? "pass " : "FAIL ") << "sweep " << name << "\n";
            for (const auto& v : violations) std::cout << "     " << v << "\n";
          }
        }
      }
      if (as_json) std::cout << out.dump(2) << "\n";
      return all_pass ? 0 : 1;
    }
  } catch (const Error& err) {
    if (as_json)
      std::cerr << json{{"error", {{"type", err.kind()}, {"message", err.what()}}}}.dump()
                << "\n";
    else
      std::cerr << "error (" << err.kind() << "): " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    if (as_json)
      std::cerr << json{{"error", {{"type", "Internal"}, {"message", err.what()}}}}.dump()
                << "\n";
    else
      std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 2;
}
