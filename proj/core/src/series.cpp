#include "ivp/series.hpp"

#include <stdexcept>

#include "series_ops.hpp"

namespace ivp {

using detail::Coeffs;

namespace {

// coefficient `order` of the defining right-hand side, which only involves
// lower-order coefficients of f
mpz_class plane_rhs_coeff(const Coeffs& f, int order, Family family) {
  Coeffs f2 = detail::mul_trunc(f, f, order);
  Coeffs f4 = detail::mul_trunc(f2, f2, order);
  mpz_class rhs = order == 1 ? 1 : 0;
  if (family == Family::posets) {
    Coeffs g(static_cast<std::size_t>(order) + 1, 0);
    for (int i = 0; i <= order; ++i)
      g[static_cast<std::size_t>(i)] = f2[static_cast<std::size_t>(i)] + f4[static_cast<std::size_t>(i)];
    rhs += detail::div_one_minus(g, f, order)[static_cast<std::size_t>(order)];
  } else {
    rhs += f2[static_cast<std::size_t>(order)];
    rhs += detail::div_one_minus(f4, f, order)[static_cast<std::size_t>(order)];
  }
  return rhs;
}

} // namespace

CoefficientSeries series_fixed_point(Family family, int N) {
  if (N < 1) throw std::invalid_argument("series order must be >= 1");
  Coeffs f(static_cast<std::size_t>(N) + 1, 0);
  for (int order = 1; order <= N; ++order)
    f[static_cast<std::size_t>(order)] = plane_rhs_coeff(f, order, family);
  return CoefficientSeries(std::move(f));
}

CoefficientSeries series_nonplane(Family family, int N) {
  if (N < 1) throw std::invalid_argument("series order must be >= 1");
  // MSet(Q) = exp(S) with S = sum_m Q(z^m)/m. With c_j = j*S_j = sum_{d|j} d*Q_d,
  // exp translates into n*E_n = sum_{j<=n} c_j E_{n-j}. The multiset count
  // MSet>=2(Q)_n = E_n - Q_n depends only on coefficients below n, which is
  // what lets the defining equation be solved one order at a time.
  Coeffs Q(static_cast<std::size_t>(N) + 1, 0);
  Coeffs E(static_cast<std::size_t>(N) + 1, 0);
  Coeffs c(static_cast<std::size_t>(N) + 1, 0);
  Coeffs Q2(static_cast<std::size_t>(N) + 1, 0), Q3(static_cast<std::size_t>(N) + 1, 0);
  E[0] = 1;

  for (int n = 1; n <= N; ++n) {
    mpz_class c_partial = 0; // c_n without the d = n term
    for (int d = 1; d < n; ++d)
      if (n % d == 0) c_partial += d * Q[static_cast<std::size_t>(d)];
    mpz_class num = c_partial;
    for (int j = 1; j < n; ++j) num += c[static_cast<std::size_t>(j)] * E[static_cast<std::size_t>(n - j)];
    mpq_class partial_q(num, n);
    partial_q.canonicalize();
    if (partial_q.get_den() != 1)
      throw std::logic_error("multiset expansion produced a non-integer coefficient");
    mpz_class partial = partial_q.get_num(); // = MSet>=2(Q)_n

    for (int i = 1; i < n; ++i) Q2[static_cast<std::size_t>(n)] += Q[static_cast<std::size_t>(i)] * Q[static_cast<std::size_t>(n - i)];
    for (int i = 2; i < n; ++i) Q3[static_cast<std::size_t>(n)] += Q2[static_cast<std::size_t>(i)] * Q[static_cast<std::size_t>(n - i)];

    // MSet=2(F) = (F(z)^2 + F(z^2))/2
    mpz_class m2num = Q2[static_cast<std::size_t>(n)];
    if (n % 2 == 0) m2num += Q[static_cast<std::size_t>(n / 2)];
    mpz_class m2 = m2num / 2;
    if (m2 * 2 != m2num) throw std::logic_error("pair-multiset count not integral");

    // MSet=3(F) = (F(z)^3 + 3 F(z) F(z^2) + 2 F(z^3))/6
    mpz_class qq2 = 0; // [z^n] Q(z) Q(z^2)
    for (int j = 1; 2 * j <= n - 1; ++j) qq2 += Q[static_cast<std::size_t>(n - 2 * j)] * Q[static_cast<std::size_t>(j)];
    mpz_class m3num = Q3[static_cast<std::size_t>(n)] + 3 * qq2;
    if (n % 3 == 0) m3num += 2 * Q[static_cast<std::size_t>(n / 3)];
    mpz_class m3 = m3num / 6;
    if (m3 * 6 != m3num) throw std::logic_error("triple-multiset count not integral");

    mpz_class coeff = n == 1 ? 1 : 0;
    if (family == Family::posets)
      coeff += 2 * partial - m2 - m3; // MSet>=2 + MSet>=4
    else
      coeff += partial - m3; // MSet=2 + MSet>=4
    if (coeff < 0) throw std::logic_error("negative multiset coefficient");
    Q[static_cast<std::size_t>(n)] = coeff;
    E[static_cast<std::size_t>(n)] = partial + coeff;
    c[static_cast<std::size_t>(n)] = c_partial + n * coeff;
  }
  return CoefficientSeries(std::move(Q));
}

std::string series_to_json(const CoefficientSeries& s) {
  std::string out = "[";
  for (int i = 0; i <= s.order(); ++i) {
    if (i) out += ',';
    out += '"';
    out += s[i].get_str();
    out += '"';
  }
  out += ']';
  return out;
}

} // namespace ivp
