#include "ivp/mobius.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "ivp/decomposition.hpp"

namespace ivp {

namespace {

long long mobius_at(const IntervalPoset& p, int x, int b, std::vector<std::optional<long long>>& memo) {
  if (x == b) return 1;
  if (!p.leq(x, b)) return 0;
  if (memo[static_cast<std::size_t>(x)]) return *memo[static_cast<std::size_t>(x)];
  long long sum = 0;
  const int m = static_cast<int>(p.elements().size());
  for (int y = 0; y < m; ++y)
    if (y != x && p.leq(x, y) && p.leq(y, b)) sum += mobius_at(p, y, b, memo);
  memo[static_cast<std::size_t>(x)] = -sum;
  return -sum;
}

} // namespace

long long mobius_generic(const IntervalPoset& p, const ValueInterval& a, const ValueInterval& b) {
  int ia = p.index_of(a), ib = p.index_of(b);
  if (ia < 0 || ib < 0) throw std::invalid_argument("mobius_generic: not elements of the poset");
  std::vector<std::optional<long long>> memo(p.elements().size());
  return mobius_at(p, ia, ib, memo);
}

std::vector<long long> mobius_column(const IntervalPoset& p, const ValueInterval& b) {
  int ib = p.index_of(b);
  if (ib < 0) throw std::invalid_argument("mobius_column: not an element of the poset");
  std::vector<std::optional<long long>> memo(p.elements().size());
  std::vector<long long> out(p.elements().size(), 0);
  for (int x = 0; x < static_cast<int>(p.elements().size()); ++x)
    out[static_cast<std::size_t>(x)] = mobius_at(p, x, ib, memo);
  return out;
}

Permutation restrict_to(const Permutation& p, const ValueInterval& J) {
  if (J.is_empty()) throw std::invalid_argument("restrict_to: empty interval");
  auto ivs = intervals(p);
  if (!std::binary_search(ivs.begin(), ivs.end(), J))
    throw std::invalid_argument(format_interval(J) + " is not an interval of " +
                                format_permutation(p));
  std::vector<int> vals;
  for (int v : p.values())
    if (J.contains_value(v)) vals.push_back(v - J.lo() + 1);
  return Permutation(std::move(vals));
}

namespace {

// value ranges of the root children blocks, sorted by value
std::vector<ValueInterval> root_blocks(const Permutation& p) {
  auto strong = strong_intervals(p);
  std::vector<ValueInterval> blocks;
  const ValueInterval full(1, p.size());
  for (const auto& s : strong) {
    if (s == full) continue;
    bool maximal = true;
    for (const auto& t : strong) {
      if (t == full || t == s) continue;
      if (s.contained_in(t)) {
        maximal = false;
        break;
      }
    }
    if (maximal) blocks.push_back(s);
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

} // namespace

long long mobius_closed(const Permutation& sigma, const ValueInterval& I, const ValueInterval& J) {
  const int n = sigma.size();
  auto ivs = intervals(sigma);
  auto is_element = [&](const ValueInterval& x) {
    return x.is_empty() || std::binary_search(ivs.begin(), ivs.end(), x);
  };
  if (!is_element(I) || !is_element(J))
    throw std::invalid_argument("mobius_closed: arguments must be elements of the interval poset");

  if (I == J) return 1;
  if (!I.contained_in(J)) return 0;

  if (J != ValueInterval(1, n)) {
    // restriction: the subposet below J is the interval poset of a smaller
    // permutation, with values shifted down by lo(J)-1
    if (J.is_empty()) return 0; // I != J and I <= J impossible below empty
    Permutation tau = restrict_to(sigma, J);
    ValueInterval shifted = I.is_empty()
                                ? ValueInterval::empty()
                                : ValueInterval(I.lo() - J.lo() + 1, I.hi() - J.lo() + 1);
    return mobius_closed(tau, shifted, ValueInterval(1, tau.size()));
  }

  if (n == 1) return -1; // I is empty, covered by [1,1]

  auto blocks = root_blocks(sigma);
  const std::size_t k = blocks.size();
  bool linear_root =
      k >= 2 && std::binary_search(ivs.begin(), ivs.end(), ValueInterval(blocks[0].lo(), blocks[1].hi()));
  bool wide_linear = linear_root && k >= 3;

  if (I.is_empty()) return wide_linear ? 0 : static_cast<long long>(k) - 1;

  if (wide_linear) {
    // coatoms: the unions missing the lowest or the highest block
    if (I == ValueInterval(blocks[0].lo(), blocks[k - 2].hi()) ||
        I == ValueInterval(blocks[1].lo(), blocks[k - 1].hi()))
      return -1;
    // the element covered by both coatoms: the union missing both ends
    if (I == ValueInterval(blocks[1].lo(), blocks[k - 2].hi())) return 1;
    return 0;
  }
  // simple root or arity-2 linear root: the coatoms are the child blocks
  for (const auto& b : blocks)
    if (I == b) return -1;
  return 0;
}

} // namespace ivp
