#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "monocheb/approx_error.hpp"
#include "monocheb/cheb_series.hpp"
#include "monocheb/combinatorics.hpp"

using namespace monocheb;

namespace {

// Test-only erfc oracle, accurate to ~1e-12: Maclaurin series for the bulk,
// Lentz continued fraction for the tail.
double erf_series(double z) {
  double term = z;
  double sum = z;
  for (int k = 1; k < 200; ++k) {
    term *= -z * z / k;
    const double add = term / (2 * k + 1);
    sum += add;
    if (std::fabs(add) < 1e-18 * std::fabs(sum)) break;
  }
  return 2.0 / std::sqrt(M_PI) * sum;
}

double erfc_continued_fraction(double z) {
  // erfc(z) = exp(-z^2)/sqrt(pi) / (z + (1/2)/(z + 1/(z + (3/2)/(z + ...))))
  const double tiny = 1e-300;
  double f = z, c = z, d = 0.0;
  for (int n = 1; n < 400; ++n) {
    const double a = n / 2.0;
    d = z + a * d;
    if (d == 0.0) d = tiny;
    c = z + a / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-z * z) / std::sqrt(M_PI) / f;
}

double erfc_oracle(double z) {
  if (z < 0) return 2.0 - erfc_oracle(-z);
  if (z <= 2.5) return 1.0 - erf_series(z);
  return erfc_continued_fraction(z);
}

}  // namespace

TEST_CASE("erfc oracle sanity") {
  CHECK(erfc_oracle(0.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(erfc_oracle(1.0) == doctest::Approx(0.15729920705028513).epsilon(1e-10));
  for (double z : {-4.0, -1.5, -0.2, 0.0, 0.3, 1.0, 2.0, 2.5, 3.0, 4.5, 6.0})
    CHECK(erfc_oracle(z) == doctest::Approx(std::erfc(z)).epsilon(1e-10));
}

TEST_CASE("erfc examples") {
  CHECK(std::fabs(monocheb::erfc(0.0) - 1.0) <= 1.5e-7);
  CHECK(monocheb::erfc(10.0) < 1e-40);
  CHECK(std::fabs(monocheb::erfc(1.0) - 0.1572992) <= 1.5e-7);
}

TEST_CASE("erfc absolute accuracy against the oracle") {
  for (double z = -8.0; z <= 8.0; z += 1.0 / 128.0)
    CHECK(std::fabs(monocheb::erfc(z) - erfc_oracle(z)) <= 1.5e-7);
  // Reflection is exact by construction.
  for (double z : {0.25, 1.75, 3.5})
    CHECK(monocheb::erfc(-z) == 2.0 - monocheb::erfc(z));
}

TEST_CASE("exact_error") {
  CHECK(exact_error(3, 2) == Rational(1, 4));
  CHECK(exact_error(12, 12) == Rational(0));
  CHECK(exact_error(75, 25).to_double() ==
        doctest::Approx(0.0024442284992149664).epsilon(1e-14));
  CHECK(exact_error(75, 25).to_double() < 0.01);
  CHECK_THROWS_AS(exact_error(5, 6), std::domain_error);
}

TEST_CASE("theorem equality at x = 1 (moderate sweep)") {
  // The acceptance suite runs the full n <= 100 sweep.
  for (std::uint64_t n = 1; n <= 30; ++n) {
    const ChebSeries full = monomial_expansion(n);
    for (std::uint64_t k = 0; k <= n; ++k)
      CHECK(Rational(1) - full.truncate(k).eval_exact(Rational(1)) == p_exact(n, k));
  }
}

TEST_CASE("hoeffding_bound") {
  CHECK(hoeffding_bound(9, 0) == 2.0);
  CHECK(hoeffding_bound(75, 25) == doctest::Approx(0.031007707198018628).epsilon(1e-14));
  CHECK(hoeffding_bound(50, 10) == doctest::Approx(2.0 / M_E).epsilon(1e-14));
}

TEST_CASE("hoeffding dominates the exact error") {
  const double slack = std::ldexp(1.0, -40);
  for (std::uint64_t n = 1; n <= 200; ++n)
    for (std::uint64_t k = 0; k <= n; ++k)
      CHECK(p_exact(n, k).to_double() <= hoeffding_bound(n, k) + slack);
}

TEST_CASE("log_p_float agrees with the exact path") {
  for (std::uint64_t n : {100, 1000, 4000}) {
    for (std::uint64_t k : {std::uint64_t{0}, std::uint64_t{2}, n / 50, n / 10, n / 4}) {
      const double exact = p_exact(n, k).to_double();
      const double approx = std::exp(log_p_float(n, k));
      CHECK(std::fabs(approx - exact) <= 1e-10 * exact);
    }
  }
  CHECK(log_p_float(40, 40) == -std::numeric_limits<double>::infinity());
}

TEST_CASE("estimates") {
  const ErrorReport small = estimates(3, 2);
  CHECK(small.exact == Rational(1, 4));
  CHECK(small.exact_float == 0.25);
  CHECK_FALSE(small.exact_is_approx);
  CHECK(small.hoeffding == doctest::Approx(1.026834238065184).epsilon(1e-14));

  const ErrorReport zero_k = estimates(40, 0);
  CHECK(zero_k.hoeffding == 2.0);
  CHECK(zero_k.exact == p_exact(40, 0));
  CHECK(zero_k.erfc_p_estimate == doctest::Approx(2.0).epsilon(1e-6));

  const ErrorReport fig = estimates(75, 25);
  CHECK(fig.exact_float < 0.01);
  CHECK(fig.hoeffding == doctest::Approx(0.0310077).epsilon(1e-5));
  CHECK(fig.exact_float <= fig.hoeffding);

  // Beyond the exact-path limit the report flags the float log path.
  const ErrorReport big = estimates(6000, 300);
  CHECK(big.exact_is_approx);
  CHECK(big.exact == Rational(0));
  CHECK(big.exact_float > 0.0);
  CHECK(big.exact_float <= big.hoeffding);
  const ErrorReport ref = estimates(5000, 250);
  CHECK_FALSE(ref.exact_is_approx);

  CHECK_THROWS_AS(estimates(10, 11), std::domain_error);
}

TEST_CASE("erfc estimates order sanely in the figure regime") {
  for (std::uint64_t k : {5, 15, 25}) {
    const ErrorReport r = estimates(75, k);
    CHECK(r.erfc_best_estimate <= 10.0 * r.exact_float);
    CHECK(r.exact_float <= 10.0 * r.hoeffding);
  }
}

TEST_CASE("select_degree_bound") {
  const DegreePlan p75 = select_degree_bound(75, 1e-3);
  CHECK(p75.k == 34);
  CHECK(p75.method == DegreeMethod::bound);
  CHECK(p75.achieved <= Rational::from_double(1e-3));

  const DegreePlan p1000 = select_degree_bound(1000, 1e-6);
  CHECK(p1000.k == 171);

  // Rule value above n clamps to k = n with zero achieved error.
  const DegreePlan clamp = select_degree_bound(10, 1e-30);
  CHECK(clamp.k == 10);
  CHECK(clamp.achieved == Rational(0));

  CHECK_THROWS_AS(select_degree_bound(10, 0.0), std::domain_error);
  CHECK_THROWS_AS(select_degree_bound(10, 1.5), std::domain_error);
  CHECK_THROWS_AS(select_degree_bound(0, 0.5), std::domain_error);
}

TEST_CASE("select_degree_bound is sound over a grid") {
  for (std::uint64_t n : {10, 50, 75, 200, 500, 1000, 2000}) {
    for (double eps : {1e-1, 1e-2, 1e-4, 1e-6, 1e-8, 1e-10}) {
      const DegreePlan plan = select_degree_bound(n, eps);
      CHECK(p_exact(n, plan.k) <= Rational::from_double(eps));
    }
  }
}

TEST_CASE("select_degree_exact") {
  const DegreePlan small = select_degree_exact(3, 0.3);
  CHECK(small.k == 1);
  CHECK(small.achieved == Rational(1, 4));
  CHECK(p_exact(3, 0) > Rational::from_double(0.3));

  CHECK(select_degree_exact(2, 0.75).k == 0);   // p_{2,0} = 1/2
  CHECK(select_degree_exact(10, 0.999).k == 0); // p_{10,0} = 193/256

  const DegreePlan p75 = select_degree_exact(75, 1e-3);
  CHECK(p75.k == 29);
  CHECK(p75.k <= select_degree_bound(75, 1e-3).k);
  CHECK(p75.achieved <= Rational::from_double(1e-3));
  CHECK(p_exact(75, 28) > Rational::from_double(1e-3));

  CHECK_THROWS_AS(select_degree_exact(kExactPathLimit + 1, 0.5), std::domain_error);
}

TEST_CASE("select_degree_exact minimality and plateau parity") {
  for (std::uint64_t n = 1; n <= 40; ++n) {
    for (double eps : {0.9, 0.5, 0.1, 1e-2, 1e-4, 1e-7}) {
      const DegreePlan plan = select_degree_exact(n, eps);
      const Rational bound = Rational::from_double(eps);
      CHECK(plan.achieved <= bound);
      if (plan.k > 0) {
        CHECK(p_exact(n, plan.k - 1) > bound);
        // Minimal k lands on the low edge of a parity plateau.
        CHECK((n + plan.k) % 2 == 0);
      }
    }
  }
}

TEST_CASE("pow_by_squaring") {
  CHECK(pow_by_squaring(0.5, 0) == 1.0);
  CHECK(pow_by_squaring(-2.0, 10) == 1024.0);
  CHECK(pow_by_squaring(-2.0, 11) == -2048.0);
  CHECK(pow_by_squaring(0.3, 5) == doctest::Approx(0.00243).epsilon(1e-14));
}

TEST_CASE("grid_sup_error") {
  CHECK(grid_sup_error(3, 1, 100) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(grid_sup_error(8, 8, 64) <= 1e-12);
  CHECK(grid_sup_error(75, 25, 10001) ==
        doctest::Approx(p_exact(75, 25).to_double()).epsilon(1e-10));
  CHECK_THROWS_AS(grid_sup_error(5, 2, 1), std::domain_error);
}

TEST_CASE("grid error never exceeds the certified sup") {
  const double slack = std::ldexp(1.0, -40);
  for (std::uint64_t n : {5, 20, 75}) {
    for (std::uint64_t k = 0; k <= n; k += 5) {
      const double sup = grid_sup_error(n, k, 501);
      const double certified = p_exact(n, k).to_double();
      CHECK(sup <= certified + slack);
      CHECK(sup >= certified - slack);  // +-1 sit on the grid
    }
  }
}
