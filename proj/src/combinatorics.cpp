#include "monocheb/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace monocheb {

namespace {

// C(n, j+1) = C(n, j) * (n-j) / (j+1), division exact.
void step_up(mpz_class& c, std::uint64_t n, std::uint64_t j) {
  c *= static_cast<unsigned long>(n - j);
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(j + 1));
}

}  // namespace

Natural binomial(std::uint64_t n, std::uint64_t j) {
  if (j > n) return Natural(0);
  j = std::min(j, n - j);
  mpz_class c(1);
  for (std::uint64_t i = 1; i <= j; ++i) {
    c *= static_cast<unsigned long>(n - j + i);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return Natural(std::move(c));
}

Natural tail_sum(std::uint64_t n, std::uint64_t lo) {
  if (lo > n) return Natural(0);
  if (lo == 0) return Natural::pow2(static_cast<unsigned long>(n));
  mpz_class c = binomial(n, lo).value();
  mpz_class s = c;
  for (std::uint64_t j = lo; j < n; ++j) {
    step_up(c, n, j);
    s += c;
  }
  return Natural(std::move(s));
}

Rational p_exact(std::uint64_t n, std::uint64_t k) {
  if (n == 0) throw std::domain_error("p_exact: n must be positive");
  if (k > n) throw std::domain_error("p_exact: k > n");
  const std::uint64_t lo = (n + k) / 2 + 1;
  return Rational(tail_sum(n, lo), Natural::pow2(static_cast<unsigned long>(n - 1)));
}

Rational coin_toss_oracle(std::uint64_t n, std::uint64_t k) {
  if (n == 0) throw std::domain_error("coin_toss_oracle: n must be positive");
  if (n > kCoinTossMaxN) throw std::domain_error("coin_toss_oracle: n > 25");
  const std::uint64_t total = std::uint64_t{1} << n;
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const auto heads = static_cast<std::int64_t>(std::popcount(mask));
    const std::int64_t diff = 2 * heads - static_cast<std::int64_t>(n);
    if (static_cast<std::uint64_t>(diff < 0 ? -diff : diff) > k) ++count;
  }
  return Rational(Natural(static_cast<unsigned long>(count)),
                  Natural::pow2(static_cast<unsigned long>(n)));
}

PartialSumBound partial_sum_bound(std::uint64_t n, std::uint64_t k) {
  if (n == 0) throw std::domain_error("partial_sum_bound: n must be positive");
  if (2 * k > n) throw std::domain_error("partial_sum_bound: k > n/2");
  mpz_class c(1);  // C(n, 0)
  mpz_class s(1);
  for (std::uint64_t j = 0; j < k; ++j) {
    step_up(c, n, j);
    s += c;
  }
  const double d = static_cast<double>(n) - 2.0 * static_cast<double>(k);
  const double rhs =
      std::ldexp(std::exp(-d * d / (2.0 * static_cast<double>(n))), static_cast<int>(n));
  return {Natural(std::move(s)), rhs};
}

}  // namespace monocheb
