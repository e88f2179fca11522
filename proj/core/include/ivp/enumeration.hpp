#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <gmpxx.h>

#include "ivp/series.hpp"

namespace ivp {

// binomial coefficient from a shared, growable Pascal triangle
mpz_class binomial(int n, int k);

// Closed formula (Lagrange inversion of the defining equation):
//   p_1 = 1,  p_n = (1/n) sum_{i=1}^{n-1} sum_{k=0}^{min(i, (n-i-1)/2)}
//                   C(n+i-1,i) C(i,k) C(n-2k-2,i-1).
// The division by n must be exact; a remainder is a hard failure.
mpz_class count_interval_posets(int n);

// t_1 = 1,  t_n = (1/n) [ sum_{i=1}^{n-3} sum_{k=1}^{min(i,(n-i-1)/2)}
//                 C(n+i-1,i) C(i,k) C(n-i-k-2,k-1) + C(2n-2,n-1) ].
mpz_class count_tree_interval_posets(int n);

// n-th little Schroeder number: half the number of separable permutations of
// size n for n >= 2 (s_1 = 1), computed as the leaf count of all-linear
// skeletons via their series B = z + B^2/(1-B).
mpz_class little_schroder(int n);

// Interval posets with exactly two realizers:
// a_1 = 0, a_4 = s_4 + 1, a_n = s_n otherwise.
mpz_class count_two_realizer(int n);

struct AsymptoticData {
  double tau;              // solution of Lambda'(u) = 1 in (0,1)
  double rho;              // tau - Lambda(tau), radius of convergence
  double amplitude;        // sqrt(2 rho / Lambda''(tau))
  double growth_constant;  // 1/rho
  double stanley_constant; // sqrt(rho / (2 pi Lambda''(tau))), the n^{-3/2} prefactor
};

// Lambda(u) = (u^2+u^4)/(1-u) for posets, u^2 + u^4/(1-u) for tree posets;
// tau found by bisection refined by Newton to |Lambda'(tau)-1| <= 1e-12.
AsymptoticData asymptotics(Family family);

// Numerical growth report for the non-plane families, which have no
// closed-form singularity: the raw ratio q_N/q_{N-1}, a Richardson-style
// extrapolation of the growth constant, and the induced amplitude estimate.
struct NonplaneGrowth {
  double ratio;
  double growth_estimate;
  double amplitude_estimate;
};

NonplaneGrowth nonplane_growth(Family family, int terms = 400);

// Exhaustive classification of all n! permutations by decomposition-tree
// skeleton. Classes are keyed by the plane skeleton term.
struct CensusRecord {
  int n = 0;
  std::map<std::string, std::uint64_t> classes; // plane skeleton -> class size
  std::uint64_t plane_classes = 0;              // p_n
  std::uint64_t nonplane_classes = 0;           // q_n
  std::uint64_t tree_classes = 0;               // t_n
  std::uint64_t nonplane_tree_classes = 0;
  std::uint64_t two_realizer_classes = 0;       // a_n
  std::uint64_t total = 0;                      // checksum, must equal n!
};

int census_bound();
void set_census_bound(int n);

// Throws FeasibilityError beyond the census bound (default 9).
CensusRecord brute_force_census(int n);

std::string census_to_json(const CensusRecord& rec);

} // namespace ivp
