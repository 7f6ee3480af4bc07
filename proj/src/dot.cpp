#include "latkit/dot.hpp"

#include <sstream>

namespace latkit {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render_dot(const FiniteLattice& l, const NegationMap* neg) {
  std::ostringstream out;
  out << "digraph lattice {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=circle];\n";
  for (int i = 0; i < l.size(); ++i) {
    out << "  n" << i << " [label=" ;
    if (neg)
      out << quote(l.name(i) + " / " + l.name(neg->of(i)));
    else
      out << quote(l.name(i));
    out << "];\n";
  }
  for (auto [lo, hi] : l.poset().covers())
    out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace latkit
