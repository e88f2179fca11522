#include <string>

#include "cli.hpp"

namespace ivp::cli {

namespace {

void tree_dot_nodes(const DecompositionTree& t, const Permutation& word, int& id, int& leaf,
                    std::string& out) {
  const int me = id++;
  std::string label;
  switch (t.label()) {
    case DecompositionTree::Label::leaf: label = std::to_string(word.at(leaf++)); break;
    case DecompositionTree::Label::plus: label = "+"; break;
    case DecompositionTree::Label::minus: label = "-"; break;
    case DecompositionTree::Label::simple: label = format_permutation(t.simple_label()); break;
  }
  out += "  t" + std::to_string(me) + " [label=\"" + label + "\"];\n";
  for (const auto& c : t.children()) {
    out += "  t" + std::to_string(me) + " -> t" + std::to_string(id) + ";\n";
    tree_dot_nodes(c, word, id, leaf, out);
  }
}

std::string element_label(const ValueInterval& iv) {
  if (iv.is_empty()) return "∅";
  return "[" + std::to_string(iv.lo()) + "," + std::to_string(iv.hi()) + "]";
}

} // namespace

std::string tree_dot(const DecompositionTree& t) {
  Permutation word = tree_to_permutation(t);
  std::string out = "digraph decomposition_tree {\n  ordering=out;\n";
  int id = 0, leaf = 0;
  tree_dot_nodes(t, word, id, leaf, out);
  out += "}\n";
  return out;
}

std::string poset_dot(const IntervalPoset& p) {
  std::string out = "digraph interval_poset {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.elements().size(); ++i)
    out += "  e" + std::to_string(i) + " [label=\"" + element_label(p.elements()[i]) + "\"];\n";

  // pin the minimal elements to one bottom rank, in embedding order
  out += "  { rank=same;";
  for (int idx : p.minimal_order()) out += " e" + std::to_string(idx) + ";";
  out += " }\n";
  for (std::size_t i = 0; i + 1 < p.minimal_order().size(); ++i)
    out += "  e" + std::to_string(p.minimal_order()[i]) + " -> e" +
           std::to_string(p.minimal_order()[i + 1]) + " [style=invis];\n";

  for (auto [lo, hi] : p.covers())
    out += "  e" + std::to_string(lo) + " -> e" + std::to_string(hi) + ";\n";
  out += "}\n";
  return out;
}

} // namespace ivp::cli
