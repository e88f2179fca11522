#pragma once

// shared brute-force helpers for tests; kept independent of the library
// implementation paths they are used to check

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "ivp/decomposition.hpp"
#include "ivp/permutation.hpp"

namespace ivp_test {

inline void for_each_permutation(int n, const std::function<void(const ivp::Permutation&)>& fn) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    fn(ivp::Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

// all ordered compositions of n into parts >= 1, at least `min_parts` parts
inline std::vector<std::vector<int>> compositions(int n, int min_parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0) {
      if (static_cast<int>(cur.size()) >= min_parts) out.push_back(cur);
      return;
    }
    for (int part = 1; part <= rest; ++part) {
      cur.push_back(part);
      rec(rest - part);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

// Independent enumeration of every skeleton with n leaves (linear arity >= 2,
// prime arity >= 4), by recursion over compositions. Used as a brute-force
// counting oracle for the interval-poset sequence.
inline std::vector<ivp::Skeleton> all_skeletons(int n) {
  std::vector<ivp::Skeleton> out;
  if (n == 1) {
    out.push_back(ivp::Skeleton::leaf());
    return out;
  }
  auto expand = [&](const std::vector<int>& parts, bool prime) {
    std::vector<std::vector<ivp::Skeleton>> options;
    for (int part : parts) options.push_back(all_skeletons(part));
    std::vector<std::size_t> pick(parts.size(), 0);
    while (true) {
      std::vector<ivp::Skeleton> children;
      for (std::size_t i = 0; i < parts.size(); ++i) children.push_back(options[i][pick[i]]);
      out.push_back(prime ? ivp::Skeleton::prime(std::move(children))
                          : ivp::Skeleton::linear(std::move(children)));
      std::size_t i = pick.size();
      while (i > 0) {
        --i;
        if (++pick[i] < options[i].size()) break;
        pick[i] = 0;
        if (i == 0) return;
      }
    }
  };
  for (const auto& parts : compositions(n, 2)) expand(parts, false);
  for (const auto& parts : compositions(n, 4))
    if (parts.size() >= 4) expand(parts, true);
  return out;
}

} // namespace ivp_test
