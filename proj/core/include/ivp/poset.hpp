#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ivp/decomposition.hpp"
#include "ivp/interval.hpp"
#include "ivp/permutation.hpp"

namespace ivp {

enum class Variant { original, modified };

// Inclusion poset of the intervals of a permutation, with a plane embedding
// given by the left-to-right order of the minimal elements: value order for
// the original variant, position order for the modified one. Optionally
// carries the empty interval as a unique minimum.
//
// Elements built from a skeleton carry runs of leaf positions instead of
// value intervals; all order-theoretic operations are shared.
class IntervalPoset {
public:
  int ambient_size() const { return n_; }
  Variant variant() const { return variant_; }
  bool with_empty() const { return with_empty_; }

  // canonical order: the empty interval first when present, then by (lo,hi)
  const std::vector<ValueInterval>& elements() const { return elements_; }
  // indices into elements() of the n singletons, left to right
  const std::vector<int>& minimal_order() const { return minimal_order_; }
  // transitive reduction of inclusion, as (lower, upper) index pairs, sorted
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  // -1 when absent
  int index_of(const ValueInterval& iv) const;
  bool leq(int a, int b) const {
    return elements_[static_cast<std::size_t>(a)].contained_in(elements_[static_cast<std::size_t>(b)]);
  }
  bool covers_pair(int lower, int upper) const;

  // Plane-embedding signature: element -> contiguous run of positions
  // (1-based, in minimal_order) of the minimal elements below it.
  // The empty interval maps to the empty run.
  const std::vector<ValueInterval>& embedding_runs() const { return runs_; }

  // equal element sets, equal minimal-element sequence, equal empty flag
  bool operator==(const IntervalPoset& other) const;

  static IntervalPoset build(int n, std::vector<ValueInterval> elements,
                             std::vector<ValueInterval> minimal_sequence, Variant variant,
                             bool with_empty);

private:
  IntervalPoset() = default;

  int n_ = 0;
  Variant variant_ = Variant::modified;
  bool with_empty_ = false;
  std::vector<ValueInterval> elements_;
  std::vector<int> minimal_order_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<ValueInterval> runs_;
  std::vector<char> cover_matrix_; // m*m, [lower*m+upper]
};

// Brute-force construction from the interval set of p.
IntervalPoset poset_of(const Permutation& p, Variant variant, bool with_empty);

enum class BlockKind { dual_claw, argyle };

// dual_claw(k): one maximum over k incomparable minimal elements (k+1
// elements for k >= 2); argyle(k): all subintervals of [1,k]. Both collapse
// to the one-element poset for k = 1, and dual_claw(2) == argyle(2).
IntervalPoset building_block(BlockKind kind, int k);

// The plane poset shared by every permutation with this skeleton: a leaf
// becomes one element, a prime node of arity k a dual claw, a linear node of
// arity k an argyle block, identifying each block minimum with the maximum
// of the corresponding child poset. Elements are runs of leaf positions;
// the embedding is the modified one.
IntervalPoset poset_from_skeleton(const Skeleton& s);

// Equality as plane-embedded posets: same run families and same covers
// under the run identification.
bool same_embedding(const IntervalPoset& a, const IntervalPoset& b);

// Recovers the skeleton of the underlying decomposition tree from the poset
// structure alone. Throws std::invalid_argument when the input is not an
// interval poset of any permutation.
Skeleton skeleton_of_poset(const IntervalPoset& p);

// plane=true: skeleton term of the underlying tree (equal keys iff equal as
// plane-embedded posets); plane=false: children sorted recursively (equal
// keys iff isomorphic as abstract posets).
std::string canonical_key(const IntervalPoset& p, bool plane);

// greatest lower bound and least upper bound by exhaustive search,
// each when it exists; a and b must be elements of p
std::pair<std::optional<ValueInterval>, std::optional<ValueInterval>> meet_join(
    const IntervalPoset& p, const ValueInterval& a, const ValueInterval& b);

bool is_lattice(const IntervalPoset& p);
// both throw std::domain_error when p is not a lattice
bool is_modular(const IntervalPoset& p);
bool is_distributive(const IntervalPoset& p);

// no prime node in the skeleton (no dual claw with > 2 minimal elements)
bool is_binary(const IntervalPoset& p);
// Hasse diagram is a tree (no linear node of arity >= 3)
bool is_tree_poset(const IntervalPoset& p);

// exact rational with tiny terms; layout coordinates are half-integers
struct Rational {
  long long num = 0;
  long long den = 1;
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational&) const = default;
};

struct LayoutPoint {
  ValueInterval element;
  Rational x; // midpoint of the run of minimal elements below
  Rational y; // cardinality of the element
};

struct PlanarLayout {
  std::vector<LayoutPoint> points; // aligned with elements()
  int crossing_count = 0;          // proper intersections among straight cover edges
};

PlanarLayout planar_layout(const IntervalPoset& p);

// { n, variant, with_empty, elements: [[lo,hi]|null], minimal_order, covers }
std::string poset_to_json(const IntervalPoset& p);

} // namespace ivp
