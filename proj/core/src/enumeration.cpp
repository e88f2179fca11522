#include "ivp/enumeration.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "series_ops.hpp"

namespace ivp {

namespace {

class PascalTriangle {
public:
  mpz_class binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::lock_guard lock(mutex_);
    while (static_cast<int>(rows_.size()) <= n) {
      const std::size_t r = rows_.size();
      std::vector<mpz_class> row(r + 1, 1);
      for (std::size_t j = 1; j < r; ++j) row[j] = rows_[r - 1][j - 1] + rows_[r - 1][j];
      rows_.push_back(std::move(row));
    }
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

private:
  std::mutex mutex_;
  std::vector<std::vector<mpz_class>> rows_;
};

PascalTriangle& pascal() {
  static PascalTriangle t;
  return t;
}

mpz_class exact_div(mpz_class num, int n, const char* what) {
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), mpz_class(n).get_mpz_t());
  if (r != 0)
    throw std::logic_error(std::string(what) + ": sum not divisible by " + std::to_string(n));
  return q;
}

} // namespace

mpz_class binomial(int n, int k) { return pascal().binom(n, k); }

mpz_class count_interval_posets(int n) {
  if (n < 1) throw std::invalid_argument("count_interval_posets: n must be >= 1");
  if (n == 1) return 1;
  mpz_class total = 0;
  for (int i = 1; i <= n - 1; ++i) {
    const int kmax = std::min(i, (n - i - 1) / 2);
    for (int k = 0; k <= kmax; ++k)
      total += binomial(n + i - 1, i) * binomial(i, k) * binomial(n - 2 * k - 2, i - 1);
  }
  return exact_div(std::move(total), n, "count_interval_posets");
}

mpz_class count_tree_interval_posets(int n) {
  if (n < 1) throw std::invalid_argument("count_tree_interval_posets: n must be >= 1");
  if (n == 1) return 1;
  mpz_class total = binomial(2 * n - 2, n - 1);
  for (int i = 1; i <= n - 3; ++i) {
    const int kmax = std::min(i, (n - i - 1) / 2);
    for (int k = 1; k <= kmax; ++k)
      total += binomial(n + i - 1, i) * binomial(i, k) * binomial(n - i - k - 2, k - 1);
  }
  return exact_div(std::move(total), n, "count_tree_interval_posets");
}

namespace {

// little Schroeder numbers as the series of all-linear skeletons,
// B = z + B^2/(1-B); separable permutations of size n number 2*s_n for n >= 2
std::mutex g_schroder_mutex;
detail::Coeffs g_schroder; // index 0..order computed so far

void ensure_schroder(int n) {
  std::lock_guard lock(g_schroder_mutex);
  int have = static_cast<int>(g_schroder.size()) - 1;
  if (have >= n) return;
  detail::Coeffs b(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i <= have; ++i) b[static_cast<std::size_t>(i)] = g_schroder[static_cast<std::size_t>(i)];
  for (int order = std::max(1, have + 1); order <= n; ++order) {
    detail::Coeffs b2 = detail::mul_trunc(b, b, order);
    b[static_cast<std::size_t>(order)] =
        (order == 1 ? 1 : 0) + detail::div_one_minus(b2, b, order)[static_cast<std::size_t>(order)];
  }
  g_schroder = std::move(b);
}

} // namespace

mpz_class little_schroder(int n) {
  if (n < 1) throw std::invalid_argument("little_schroder: n must be >= 1");
  ensure_schroder(n);
  std::lock_guard lock(g_schroder_mutex);
  return g_schroder[static_cast<std::size_t>(n)];
}

mpz_class count_two_realizer(int n) {
  if (n < 1) throw std::invalid_argument("count_two_realizer: n must be >= 1");
  if (n == 1) return 0;
  mpz_class s = little_schroder(n);
  if (n == 4) s += 1; // the dual claw with 4 minimal elements (realizers 2413, 3142)
  return s;
}

namespace {

struct LambdaFuncs {
  double (*f)(double);
  double (*d1)(double);
  double (*d2)(double);
};

double lam_p(double u) { return (u * u + u * u * u * u) / (1 - u); }
double lam_p_d1(double u) {
  double num = (2 * u + 4 * u * u * u) * (1 - u) + u * u + u * u * u * u;
  return num / ((1 - u) * (1 - u));
}
double lam_p_d2(double u) {
  double a = 1 - u;
  return (2 + 12 * u * u) / a + 2 * (2 * u + 4 * u * u * u) / (a * a) +
         2 * (u * u + u * u * u * u) / (a * a * a);
}

double lam_t(double u) { return u * u + u * u * u * u / (1 - u); }
double lam_t_d1(double u) {
  double a = 1 - u;
  return 2 * u + 4 * u * u * u / a + u * u * u * u / (a * a);
}
double lam_t_d2(double u) {
  double a = 1 - u;
  return 2 + 12 * u * u / a + 8 * u * u * u / (a * a) + 2 * u * u * u * u / (a * a * a);
}

} // namespace

AsymptoticData asymptotics(Family family) {
  LambdaFuncs L = family == Family::posets ? LambdaFuncs{lam_p, lam_p_d1, lam_p_d2}
                                           : LambdaFuncs{lam_t, lam_t_d1, lam_t_d2};
  // Lambda' is increasing on (0,1), from 0 to +infinity: bracket then bisect
  double lo = 1e-9, hi = 1.0 - 1e-9;
  if (L.d1(lo) >= 1 || L.d1(hi) <= 1) throw std::logic_error("asymptotics: failed to bracket tau");
  for (int i = 0; i < 200 && hi - lo > 1e-14; ++i) {
    double mid = 0.5 * (lo + hi);
    (L.d1(mid) < 1 ? lo : hi) = mid;
  }
  double tau = 0.5 * (lo + hi);
  for (int i = 0; i < 50; ++i) {
    double r = L.d1(tau) - 1;
    if (std::abs(r) <= 1e-13) break;
    tau -= r / L.d2(tau);
  }
  if (std::abs(L.d1(tau) - 1) > 1e-12)
    throw std::logic_error("asymptotics: Newton refinement did not reach tolerance");

  AsymptoticData out;
  out.tau = tau;
  out.rho = tau - L.f(tau);
  out.amplitude = std::sqrt(2 * out.rho / L.d2(tau));
  out.growth_constant = 1.0 / out.rho;
  out.stanley_constant = std::sqrt(out.rho / (2 * std::numbers::pi * L.d2(tau)));
  return out;
}

namespace {

NonplaneGrowth growth_from_series(const CoefficientSeries& q, int N) {
  auto ratio_at = [&](int n) {
    mpq_class r(q[n], q[n - 1]);
    r.canonicalize();
    return r.get_d();
  };
  NonplaneGrowth out;
  out.ratio = ratio_at(N);
  // one Richardson step on r_n ~ beta (1 - c/n)
  out.growth_estimate = N * out.ratio - (N - 1) * ratio_at(N - 1);
  // alpha from q_N ~ alpha N^{-3/2} beta^N
  signed long exp2;
  double mant = mpz_get_d_2exp(&exp2, q[N].get_mpz_t());
  double logq = std::log(mant) + static_cast<double>(exp2) * std::numbers::ln2;
  out.amplitude_estimate =
      std::exp(logq + 1.5 * std::log(static_cast<double>(N)) - N * std::log(out.growth_estimate));
  return out;
}

} // namespace

NonplaneGrowth nonplane_growth(Family family, int terms) {
  if (terms < 3) throw std::invalid_argument("nonplane_growth: need at least 3 terms");
  return growth_from_series(series_nonplane(family, terms), terms);
}

} // namespace ivp
