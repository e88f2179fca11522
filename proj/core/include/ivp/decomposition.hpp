#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "ivp/permutation.hpp"

namespace ivp {

// Substitution decomposition tree: a plane tree whose internal nodes are
// labeled + (increasing quotient), - (decreasing quotient) or a simple
// permutation with one child per entry. Size = number of leaves.
class DecompositionTree {
public:
  enum class Label { leaf, plus, minus, simple };

  static DecompositionTree leaf();
  static DecompositionTree plus(std::vector<DecompositionTree> children);
  static DecompositionTree minus(std::vector<DecompositionTree> children);
  static DecompositionTree simple(Permutation label, std::vector<DecompositionTree> children);

  Label label() const { return label_; }
  bool is_leaf() const { return label_ == Label::leaf; }
  // only valid when label() == Label::simple
  const Permutation& simple_label() const { return *simple_; }
  const std::vector<DecompositionTree>& children() const { return children_; }
  int leaf_count() const;

  bool operator==(const DecompositionTree&) const = default;

private:
  DecompositionTree(Label l, std::optional<Permutation> s, std::vector<DecompositionTree> ch)
      : label_(l), simple_(std::move(s)), children_(std::move(ch)) {}

  Label label_;
  std::optional<Permutation> simple_;
  std::vector<DecompositionTree> children_;
};

// Decomposition tree with labels reduced to prime/linear kinds.
class Skeleton {
public:
  enum class Kind { leaf, linear, prime };

  static Skeleton leaf();
  static Skeleton linear(std::vector<Skeleton> children);
  static Skeleton prime(std::vector<Skeleton> children);

  Kind kind() const { return kind_; }
  bool is_leaf() const { return kind_ == Kind::leaf; }
  const std::vector<Skeleton>& children() const { return children_; }
  int leaf_count() const;

  bool operator==(const Skeleton&) const = default;
  bool operator<(const Skeleton& other) const;

private:
  Skeleton(Kind k, std::vector<Skeleton> ch) : kind_(k), children_(std::move(ch)) {}

  Kind kind_;
  std::vector<Skeleton> children_;
};

// Intervals that overlap no other interval. Always a laminar family
// containing the singletons and [1,n].
std::vector<ValueInterval> strong_intervals(const Permutation& p);

// The unique decomposition tree of p: nodes are the strong intervals,
// internal labels the quotient pattern of the children blocks.
DecompositionTree decomposition_tree(const Permutation& p);

// Inverse of decomposition_tree. Validates all tree invariants
// (arities, simple labels, no +/+ or -/- edge); throws std::invalid_argument.
Permutation tree_to_permutation(const DecompositionTree& t);

Skeleton skeleton(const DecompositionTree& t);

// no simple node in the decomposition tree
bool is_separable(const Permutation& p);

bool has_prime_node(const Skeleton& s);
// some linear node with arity >= 3
bool has_wide_linear_node(const Skeleton& s);

// term syntax: leaf "1", "+[...]", "-[...]", "<word>[...]" for simple labels
std::string format_tree(const DecompositionTree& t);
DecompositionTree parse_tree(std::string_view text);

// skeleton syntax: leaf "1", "L[...]", "P[...]"
std::string format_skeleton(const Skeleton& s);
Skeleton parse_skeleton(std::string_view text);

// non-plane normal form: children recursively sorted by their term strings
Skeleton canonical_skeleton(const Skeleton& s);

// Number of permutations whose decomposition-tree skeleton equals s:
// product over non-leaf nodes v of rl(v)^eps(v), where rl is 2 for linear
// nodes and the simple-permutation count for prime nodes, and eps(v) = 0
// exactly when v is linear with a linear parent.
mpz_class realizer_count(const Skeleton& s);

std::uint64_t realizer_output_cap();
void set_realizer_output_cap(std::uint64_t cap);

// All permutations whose skeleton equals s, in lexicographic order of the
// label assignments (preorder; + before -, simple labels in lex order).
// Refused when the count exceeds the output cap.
std::vector<Permutation> enumerate_realizers(const Skeleton& s);

} // namespace ivp
