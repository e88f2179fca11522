#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ivp/interval.hpp"

namespace ivp {

// A permutation of {1,...,n} in one-line notation, n >= 1.
class Permutation {
public:
  // validates that values is a bijection onto {1..n}; throws std::invalid_argument
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);
  static Permutation decreasing(int n);

  int size() const { return static_cast<int>(values_.size()); }
  // value at 0-based position
  int at(int pos) const { return values_[static_cast<std::size_t>(pos)]; }
  const std::vector<int>& values() const { return values_; }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<int> values_;
};

// Accepts a digit string (each character one value, only usable for n <= 9)
// or a comma/space-separated list of integers.
Permutation parse_permutation(std::string_view text);

// Canonical text: digit string for n <= 9, comma-separated otherwise.
std::string format_permutation(const Permutation& p);

// All non-empty intervals of p (trivial and proper), sorted.
// A window of positions is an interval iff max - min == length - 1.
std::vector<ValueInterval> intervals(const Permutation& p);

enum class Symmetry { inverse, reverse, complement };

Permutation apply_symmetry(const Permutation& p, Symmetry s);

// substitution of parts into pattern; requires parts.size() == pattern.size()
Permutation inflate(const Permutation& pattern, const std::vector<Permutation>& parts);

// size >= 4 and only trivial intervals (sizes 1-3 are never simple)
bool is_simple(const Permutation& p);

// Feasibility bound for full enumeration of simple permutations;
// sizes beyond the bound are refused, never approximated.
int simple_enumeration_bound();
void set_simple_enumeration_bound(int k);

// All simple permutations of size k in lexicographic order, memoized.
// Throws FeasibilityError if k exceeds the enumeration bound.
const std::vector<Permutation>& enumerate_simple(int k);

} // namespace ivp
