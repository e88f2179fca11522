#pragma once

// internal truncated-series helpers shared by series.cpp and enumeration.cpp

#include <vector>

#include <gmpxx.h>

namespace ivp::detail {

using Coeffs = std::vector<mpz_class>;

// c = a*b truncated at order N (index N inclusive)
inline Coeffs mul_trunc(const Coeffs& a, const Coeffs& b, int N) {
  Coeffs c(static_cast<std::size_t>(N) + 1, 0);
  const int la = static_cast<int>(a.size()), lb = static_cast<int>(b.size());
  for (int i = 0; i < la && i <= N; ++i) {
    if (a[static_cast<std::size_t>(i)] == 0) continue;
    const int jmax = std::min(lb - 1, N - i);
    for (int j = 0; j <= jmax; ++j) {
      if (b[static_cast<std::size_t>(j)] != 0)
        c[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
  }
  return c;
}

// h = g/(1-f) truncated at order N; requires f[0] == 0
inline Coeffs div_one_minus(const Coeffs& g, const Coeffs& f, int N) {
  Coeffs h(static_cast<std::size_t>(N) + 1, 0);
  for (int n = 0; n <= N; ++n) {
    mpz_class s = n < static_cast<int>(g.size()) ? g[static_cast<std::size_t>(n)] : mpz_class(0);
    const int jmax = std::min(n, static_cast<int>(f.size()) - 1);
    for (int j = 1; j <= jmax; ++j)
      if (f[static_cast<std::size_t>(j)] != 0) s += f[static_cast<std::size_t>(j)] * h[static_cast<std::size_t>(n - j)];
    h[static_cast<std::size_t>(n)] = s;
  }
  return h;
}

} // namespace ivp::detail
