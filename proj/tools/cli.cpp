#include "cli.hpp"

#include <cstdio>
#include <map>
#include <stdexcept>

#include <CLI11.hpp>

#include "ivp/enumeration.hpp"
#include "ivp/errors.hpp"
#include "ivp/mobius.hpp"

namespace ivp::cli {

namespace {

// argument-level failures map to exit 1, computation failures to exit 2
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Permutation decode_permutation(const std::string& text) {
  try {
    return parse_permutation(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad permutation argument: ") + e.what());
  }
}

ValueInterval decode_interval(const std::string& text) {
  try {
    return parse_interval(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad interval argument: ") + e.what());
  }
}

std::string fixed10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10f", v);
  return buf;
}

std::string bool_word(bool b) { return b ? "true" : "false"; }

struct Options {
  std::string perm;
  std::string format = "term";
  std::string poset_format = "text";
  std::string variant = "modified";
  bool with_empty = false;
  bool count_only = false;
  std::uint64_t limit = realizer_output_cap();
  std::string from, to;
  std::string method = "closed";
  std::string family;
  int n = 0;
  int terms = 400;
  bool json = false;
};

std::string poset_text(const IntervalPoset& p) {
  std::string out;
  out += "n " + std::to_string(p.ambient_size()) + "\n";
  out += std::string("variant ") + (p.variant() == Variant::original ? "original" : "modified") + "\n";
  out += "with_empty " + bool_word(p.with_empty()) + "\n";
  out += "elements " + std::to_string(p.elements().size()) + "\n";
  for (std::size_t i = 0; i < p.elements().size(); ++i)
    out += "element " + std::to_string(i) + " " + format_interval(p.elements()[i]) + "\n";
  out += "minimal_order";
  for (int idx : p.minimal_order()) out += " " + std::to_string(idx);
  out += "\n";
  for (auto [lo, hi] : p.covers())
    out += "cover " + std::to_string(lo) + " " + std::to_string(hi) + "\n";
  return out;
}

std::string run_decompose(const Options& o) {
  auto p = decode_permutation(o.perm);
  auto tree = decomposition_tree(p);
  if (o.format == "term") return format_tree(tree) + "\n";
  if (o.format == "skeleton") return format_skeleton(skeleton(tree)) + "\n";
  return tree_dot(tree);
}

std::string run_poset(const Options& o) {
  auto p = decode_permutation(o.perm);
  auto poset = poset_of(p, o.variant == "original" ? Variant::original : Variant::modified,
                        o.with_empty);
  if (o.poset_format == "json") return poset_to_json(poset) + "\n";
  if (o.poset_format == "dot") return poset_dot(poset);
  return poset_text(poset);
}

std::string run_realizers(const Options& o) {
  auto p = decode_permutation(o.perm);
  auto s = skeleton(decomposition_tree(p));
  if (o.count_only) return realizer_count(s).get_str() + "\n";
  auto saved = realizer_output_cap();
  set_realizer_output_cap(o.limit);
  std::vector<Permutation> rl;
  try {
    rl = enumerate_realizers(s);
  } catch (...) {
    set_realizer_output_cap(saved);
    throw;
  }
  set_realizer_output_cap(saved);
  std::string out;
  for (const auto& r : rl) out += format_permutation(r) + "\n";
  return out;
}

std::string run_check(const Options& o) {
  auto p = decode_permutation(o.perm);
  auto pointed = poset_of(p, Variant::modified, true);
  auto plain = poset_of(p, Variant::modified, false);
  std::string out;
  out += "lattice " + bool_word(is_lattice(pointed)) + "\n";
  out += "modular " + bool_word(is_modular(pointed)) + "\n";
  out += "distributive " + bool_word(is_distributive(pointed)) + "\n";
  out += "binary " + bool_word(is_binary(plain)) + "\n";
  out += "tree " + bool_word(is_tree_poset(plain)) + "\n";
  out += "separable " + bool_word(is_separable(p)) + "\n";
  out += "simple " + bool_word(is_simple(p)) + "\n";
  out += "crossing_count " + std::to_string(planar_layout(pointed).crossing_count) + "\n";
  return out;
}

std::string run_mobius(const Options& o, std::ostream& err, int& exit_code) {
  auto p = decode_permutation(o.perm);
  auto from = decode_interval(o.from);
  auto to = decode_interval(o.to);
  if (o.method == "closed") return std::to_string(mobius_closed(p, from, to)) + "\n";
  if (o.method == "recursive")
    return std::to_string(mobius_generic(poset_of(p, Variant::modified, true), from, to)) + "\n";
  long long c = mobius_closed(p, from, to);
  long long r = mobius_generic(poset_of(p, Variant::modified, true), from, to);
  if (c != r) {
    err << "mobius methods disagree: closed " << c << ", recursive " << r << "\n";
    exit_code = 2;
    return "";
  }
  return "closed " + std::to_string(c) + "\nrecursive " + std::to_string(r) + "\n";
}

std::string run_count(const Options& o) {
  const std::string& fam = o.family;
  std::string method = o.method;
  if (method == "closed") method = "formula";
  const bool nonplane = fam == "nonplane" || fam == "nonplane-tree";
  if (method == "default") method = nonplane ? "series" : "formula";
  if (o.n < 1) throw UsageError("count: --n must be >= 1");

  if (method == "formula") {
    if (fam == "posets") return count_interval_posets(o.n).get_str() + "\n";
    if (fam == "tree-posets") return count_tree_interval_posets(o.n).get_str() + "\n";
    if (fam == "two-realizer") return count_two_realizer(o.n).get_str() + "\n";
    throw UsageError("no closed formula for family '" + fam + "'");
  }
  if (method == "series") {
    if (fam == "posets") return series_fixed_point(Family::posets, o.n)[o.n].get_str() + "\n";
    if (fam == "tree-posets")
      return series_fixed_point(Family::tree_posets, o.n)[o.n].get_str() + "\n";
    if (fam == "nonplane") return series_nonplane(Family::posets, o.n)[o.n].get_str() + "\n";
    if (fam == "nonplane-tree")
      return series_nonplane(Family::tree_posets, o.n)[o.n].get_str() + "\n";
    throw UsageError("no series route for family '" + fam + "'");
  }
  // census
  auto rec = brute_force_census(o.n);
  std::uint64_t v = 0;
  if (fam == "posets") v = rec.plane_classes;
  else if (fam == "tree-posets") v = rec.tree_classes;
  else if (fam == "two-realizer") v = rec.two_realizer_classes;
  else if (fam == "nonplane") v = rec.nonplane_classes;
  else v = rec.nonplane_tree_classes;
  return std::to_string(v) + "\n";
}

std::string run_asymptotics(const Options& o) {
  if (o.family == "posets" || o.family == "tree-posets") {
    auto a = asymptotics(o.family == "posets" ? Family::posets : Family::tree_posets);
    std::string out;
    out += "tau " + fixed10(a.tau) + "\n";
    out += "rho " + fixed10(a.rho) + "\n";
    out += "amplitude " + fixed10(a.amplitude) + "\n";
    out += "stanley_constant " + fixed10(a.stanley_constant) + "\n";
    out += "growth_constant " + fixed10(a.growth_constant) + "\n";
    return out;
  }
  // non-plane families only admit the numerical report
  auto g = nonplane_growth(o.family == "nonplane" ? Family::posets : Family::tree_posets, o.terms);
  std::string out;
  out += "ratio " + fixed10(g.ratio) + "\n";
  out += "growth_estimate " + fixed10(g.growth_estimate) + "\n";
  out += "amplitude_estimate " + fixed10(g.amplitude_estimate) + "\n";
  return out;
}

std::string run_census(const Options& o) {
  auto rec = brute_force_census(o.n);
  if (o.json) return census_to_json(rec) + "\n";
  std::string out;
  out += "n " + std::to_string(rec.n) + "\n";
  out += "total " + std::to_string(rec.total) + "\n";
  out += "plane_classes " + std::to_string(rec.plane_classes) + "\n";
  out += "nonplane_classes " + std::to_string(rec.nonplane_classes) + "\n";
  out += "tree_classes " + std::to_string(rec.tree_classes) + "\n";
  out += "nonplane_tree_classes " + std::to_string(rec.nonplane_tree_classes) + "\n";
  out += "two_realizer_classes " + std::to_string(rec.two_realizer_classes) + "\n";
  std::map<std::uint64_t, std::uint64_t> histogram;
  for (const auto& [key, size] : rec.classes) ++histogram[size];
  for (const auto& [size, count] : histogram)
    out += "classes_of_size " + std::to_string(size) + " " + std::to_string(count) + "\n";
  return out;
}

} // namespace

CommandResult dispatch(const std::vector<std::string>& args, std::ostream& diagnostics) {
  Options o;
  CLI::App app{"interval posets of permutations via decomposition trees"};
  app.name("ivp");
  app.require_subcommand(1);

  auto* decompose = app.add_subcommand("decompose", "substitution decomposition tree of a permutation");
  decompose->add_option("perm", o.perm, "permutation (digits for n<=9, or comma separated)")->required();
  decompose->add_option("--format", o.format, "term, dot or skeleton")
      ->check(CLI::IsMember({"term", "dot", "skeleton"}));

  auto* poset = app.add_subcommand("poset", "interval poset of a permutation");
  poset->add_option("perm", o.perm)->required();
  poset->add_option("--variant", o.variant, "minimal-element order: original (value) or modified (position)")
      ->check(CLI::IsMember({"original", "modified"}));
  poset->add_flag("--with-empty", o.with_empty, "include the empty interval as minimum");
  poset->add_option("--format", o.poset_format, "dot, json or text")
      ->check(CLI::IsMember({"dot", "json", "text"}));

  auto* realizers = app.add_subcommand("realizers", "permutations sharing the interval poset");
  realizers->add_option("perm", o.perm)->required();
  realizers->add_flag("--count-only", o.count_only, "print the count instead of the list");
  realizers->add_option("--limit", o.limit, "refuse enumeration beyond this many realizers");

  auto* check = app.add_subcommand("check", "structural predicates of the interval poset");
  check->add_option("perm", o.perm)->required();

  auto* mobius = app.add_subcommand("mobius", "Mobius function on the pointed interval poset");
  mobius->add_option("perm", o.perm)->required();
  mobius->add_option("--from", o.from, "lower element: a, a..b or empty")->required();
  mobius->add_option("--to", o.to, "upper element: a, a..b or empty")->required();
  mobius->add_option("--method", o.method, "closed, recursive or both")
      ->check(CLI::IsMember({"closed", "recursive", "both"}));

  auto* count = app.add_subcommand("count", "counting sequences");
  count->add_option("family", o.family, "posets, tree-posets, two-realizer, nonplane or nonplane-tree")
      ->required()
      ->check(CLI::IsMember({"posets", "tree-posets", "two-realizer", "nonplane", "nonplane-tree"}));
  count->add_option("--n", o.n, "index in the sequence")->required();
  count->add_option("--method", o.method, "formula, series or census")
      ->check(CLI::IsMember({"formula", "series", "census"}));

  auto* asym = app.add_subcommand("asymptotics", "singularity constants / growth estimates");
  asym->add_option("family", o.family, "posets, tree-posets, nonplane or nonplane-tree")
      ->required()
      ->check(CLI::IsMember({"posets", "tree-posets", "nonplane", "nonplane-tree"}));
  asym->add_option("--terms", o.terms, "series length for the non-plane estimates");

  auto* census = app.add_subcommand("census", "exhaustive classification of all n! permutations");
  census->add_option("--n", o.n, "permutation size")->required();
  census->add_flag("--json", o.json, "full record as JSON");

  o.method = "default";

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    auto parsed = app.get_subcommands();
    return {0, parsed.empty() ? app.help() : parsed.back()->help()};
  } catch (const CLI::ParseError& e) {
    diagnostics << e.what() << "\n";
    return {1, ""};
  }

  if (o.method == "default" && (mobius->parsed())) o.method = "closed";

  try {
    CommandResult result;
    if (decompose->parsed()) result.payload = run_decompose(o);
    else if (poset->parsed()) result.payload = run_poset(o);
    else if (realizers->parsed()) result.payload = run_realizers(o);
    else if (check->parsed()) result.payload = run_check(o);
    else if (mobius->parsed()) result.payload = run_mobius(o, diagnostics, result.exit_code);
    else if (count->parsed()) result.payload = run_count(o);
    else if (asym->parsed()) result.payload = run_asymptotics(o);
    else if (census->parsed()) result.payload = run_census(o);
    return result;
  } catch (const UsageError& e) {
    diagnostics << e.what() << "\n";
    return {1, ""};
  } catch (const std::exception& e) {
    diagnostics << e.what() << "\n";
    return {2, ""};
  }
}

} // namespace ivp::cli
