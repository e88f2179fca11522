#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace ivp {

// Truncated power series with exact integer coefficients, indices 0..order.
// All families counted here have coefficient 0 at index 0.
class CoefficientSeries {
public:
  explicit CoefficientSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1, 0) {}
  explicit CoefficientSeries(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {}

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const mpz_class& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  mpz_class& at(int i) { return coeffs_[static_cast<std::size_t>(i)]; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  bool operator==(const CoefficientSeries&) const = default;

private:
  std::vector<mpz_class> coeffs_;
};

enum class Family { posets, tree_posets };

// Unique power-series solution of
//   F = z + (F^2 + F^4)/(1 - F)      (posets)
//   F = z + F^2 + F^4/(1 - F)        (tree posets)
// obtained by iterating the defining equation; each pass pins down one
// further coefficient, so coefficients 1..N are exact after N passes.
CoefficientSeries series_fixed_point(Family family, int N);

// Unique solution of the unlabeled (multiset) specification
//   Q = z + MSet>=2(Q) + MSet>=4(Q)      (posets)
//   Q = z + MSet=2(Q) + MSet>=4(Q)       (tree posets)
// with MSet(F) = exp(sum_m F(z^m)/m); the restricted operators subtract the
// explicit small-multiset polynomials. Rational intermediates are exact and
// every final coefficient is checked to be an integer.
CoefficientSeries series_nonplane(Family family, int N);

// JSON array of decimal strings, index 0..order
std::string series_to_json(const CoefficientSeries& s);

} // namespace ivp
