#include "monocheb/approx_error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "monocheb/cheb_series.hpp"
#include "monocheb/combinatorics.hpp"

namespace monocheb {

namespace {

void check_nk(std::uint64_t n, std::uint64_t k, const char* who) {
  if (n == 0) throw std::domain_error(std::string(who) + ": n must be positive");
  if (k > n) throw std::domain_error(std::string(who) + ": k > n");
}

void check_eps(double epsilon, const char* who) {
  if (!(epsilon > 0.0 && epsilon <= 1.0))
    throw std::domain_error(std::string(who) + ": epsilon must be in (0, 1]");
}

}  // namespace

Rational exact_error(std::uint64_t n, std::uint64_t k) {
  check_nk(n, k, "exact_error");
  return p_exact(n, k);
}

double hoeffding_bound(std::uint64_t n, std::uint64_t k) {
  if (n == 0) throw std::domain_error("hoeffding_bound: n must be positive");
  const double dk = static_cast<double>(k);
  return 2.0 * std::exp(-dk * dk / (2.0 * static_cast<double>(n)));
}

double erfc(double z) {
  // Rational approximation in t = 1/(1 + pz), absolute error < 1.5e-7
  // (Abramowitz & Stegun 7.1.26 coefficients); erfc(-z) = 2 - erfc(z).
  static constexpr double p = 0.3275911;
  static constexpr double a1 = 0.254829592;
  static constexpr double a2 = -0.284496736;
  static constexpr double a3 = 1.421413741;
  static constexpr double a4 = -1.453152027;
  static constexpr double a5 = 1.061405429;
  const double az = std::fabs(z);
  const double t = 1.0 / (1.0 + p * az);
  const double poly = t * (a1 + t * (a2 + t * (a3 + t * (a4 + t * a5))));
  const double tail = poly * std::exp(-az * az);
  return z < 0.0 ? 2.0 - tail : tail;
}

double log_p_float(std::uint64_t n, std::uint64_t k) {
  check_nk(n, k, "log_p_float");
  const std::uint64_t lo = (n + k) / 2 + 1;
  if (lo > n) return -std::numeric_limits<double>::infinity();

  const long double lg_n1 = std::lgamma(static_cast<long double>(n) + 1.0L);
  const auto log_binom = [&](std::uint64_t j) {
    return lg_n1 - std::lgamma(static_cast<long double>(j) + 1.0L) -
           std::lgamma(static_cast<long double>(n - j) + 1.0L);
  };

  // Terms decrease with j (lo > n/2), so the first is the max of the
  // log-sum-exp and the running sum can stop once additions are negligible.
  const long double peak = log_binom(lo);
  long double sum = 0.0L;
  for (std::uint64_t j = lo; j <= n; ++j) {
    const long double term = std::exp(log_binom(j) - peak);
    sum += term;
    if (term < 1e-22L * sum) break;
  }
  const long double log_p =
      (1.0L - static_cast<long double>(n)) * std::log(2.0L) + peak + std::log(sum);
  return static_cast<double>(log_p);
}

ErrorReport estimates(std::uint64_t n, std::uint64_t k) {
  check_nk(n, k, "estimates");
  ErrorReport r;
  r.n = n;
  r.k = k;
  if (n <= kExactPathLimit) {
    r.exact = p_exact(n, k);
    r.exact_float = r.exact.to_double();
  } else {
    r.exact_is_approx = true;
    r.exact_float = std::exp(log_p_float(n, k));
  }
  r.hoeffding = hoeffding_bound(n, k);
  const double z = static_cast<double>(k) / std::sqrt(static_cast<double>(n));
  r.erfc_p_estimate = 2.0 * erfc(z);
  r.erfc_best_estimate = 0.5 * erfc(z);
  return r;
}

DegreePlan select_degree_bound(std::uint64_t n, double epsilon) {
  if (n == 0) throw std::domain_error("select_degree_bound: n must be positive");
  check_eps(epsilon, "select_degree_bound");
  DegreePlan plan;
  plan.n = n;
  plan.epsilon = epsilon;
  plan.method = DegreeMethod::bound;
  const double raw =
      std::ceil(std::sqrt(2.0 * static_cast<double>(n) * std::log(2.0 / epsilon)));
  plan.k = raw >= static_cast<double>(n) ? n : static_cast<std::uint64_t>(raw);
  if (n <= kExactPathLimit) {
    plan.achieved = p_exact(n, plan.k);
    plan.achieved_float = plan.achieved.to_double();
  } else {
    plan.achieved_is_approx = true;
    plan.achieved_float = std::exp(log_p_float(n, plan.k));
  }
  return plan;
}

DegreePlan select_degree_exact(std::uint64_t n, double epsilon) {
  if (n == 0) throw std::domain_error("select_degree_exact: n must be positive");
  check_eps(epsilon, "select_degree_exact");
  if (n > kExactPathLimit)
    throw std::domain_error("select_degree_exact: n above exact-path limit");

  // p_{n,k} is nonincreasing in k and p_{n,n} = 0 <= eps, so the predicate
  // p_{n,k} <= eps is monotone and binary search finds the minimal k.  eps
  // enters as its exact binary64 value, keeping the comparison exact.
  const Rational eps = Rational::from_double(epsilon);
  std::uint64_t lo = 0, hi = n;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (p_exact(n, mid) <= eps)
      hi = mid;
    else
      lo = mid + 1;
  }
  DegreePlan plan;
  plan.n = n;
  plan.epsilon = epsilon;
  plan.method = DegreeMethod::exact;
  plan.k = lo;
  plan.achieved = p_exact(n, lo);
  plan.achieved_float = plan.achieved.to_double();
  return plan;
}

double pow_by_squaring(double x, std::uint64_t e) {
  double result = 1.0;
  double base = x;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

double grid_sup_error(std::uint64_t n, std::uint64_t k, std::uint64_t m) {
  check_nk(n, k, "grid_sup_error");
  if (m < 2) throw std::domain_error("grid_sup_error: m must be at least 2");
  const ChebSeries phi = monomial_expansion(n).truncate(k);
  const std::vector<double> coeffs = phi.float_coeffs();

  const auto err_at = [&](double x) {
    return std::fabs(pow_by_squaring(x, n) - clenshaw(coeffs, x));
  };

  double sup = std::max(err_at(1.0), err_at(-1.0));
  for (double x : cheb_nodes(m)) sup = std::max(sup, err_at(x));
  return sup;
}

}  // namespace monocheb
