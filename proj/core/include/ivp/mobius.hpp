#pragma once

#include <vector>

#include "ivp/interval.hpp"
#include "ivp/permutation.hpp"
#include "ivp/poset.hpp"

namespace ivp {

// Top-down recursive Mobius value with memoization:
// mu(a,a) = 1, mu(a,b) = -sum_{x: a < x <= b} mu(x,b), 0 when a is not <= b.
long long mobius_generic(const IntervalPoset& p, const ValueInterval& a, const ValueInterval& b);

// mu(x, b) for every element x, aligned with p.elements()
std::vector<long long> mobius_column(const IntervalPoset& p, const ValueInterval& b);

// The subsequence of p with values in J, rescaled to {1..|J|}.
// J must be a non-empty interval of p; the subposet [empty, J] of the
// pointed interval poset of p is isomorphic to that of the result.
Permutation restrict_to(const Permutation& p, const ValueInterval& J);

// Closed form on the pointed modified interval poset of sigma, driven by the
// root of the decomposition tree when J = [1,n]:
//   1                if I = J,
//  -1                if I is a coatom,
//   k-1              if I = empty and the root is simple or of arity 2,
//   1                if the root is linear of arity k >= 3 and I is the
//                    element covered by both coatoms,
//   0                otherwise;
// for J inside [1,n] the query restricts to J and recurses.
long long mobius_closed(const Permutation& sigma, const ValueInterval& I, const ValueInterval& J);

} // namespace ivp
