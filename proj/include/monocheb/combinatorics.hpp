// Exact binomial combinatorics behind the truncation error p_{n,k}:
// coefficients, tail sums, the exact error value, a partial-sum upper bound,
// and an exhaustive coin-toss enumeration used as a cross-check oracle.
//
// p_{n,k} = 2^{1-n} * sum_{j = floor((n+k)/2)+1}^{n} C(n,j) is both the
// sup-norm error of the degree-k Chebyshev truncation of x^n and the
// probability that n fair coin tosses give |#heads - #tails| > k.
//
// All functions are pure and thread-safe.

#ifndef MONOCHEB_COMBINATORICS_HPP
#define MONOCHEB_COMBINATORICS_HPP

#include <cstdint>

#include "monocheb/rational.hpp"

namespace monocheb {

/// C(n, j); 0 when j > n.  Multiplicative running product, exact at every
/// step (each prefix is itself a binomial coefficient).
Natural binomial(std::uint64_t n, std::uint64_t j);

/// sum_{j = lo}^{n} C(n, j); 0 when lo > n, 2^n when lo == 0.
Natural tail_sum(std::uint64_t n, std::uint64_t lo);

/// Exact p_{n,k}.  Requires n >= 1 and k <= n; p_{n,n} = 0.
Rational p_exact(std::uint64_t n, std::uint64_t k);

/// Largest n accepted by coin_toss_oracle (2^n sequences are enumerated).
inline constexpr std::uint64_t kCoinTossMaxN = 25;

/// Probability that |#heads - #tails| > k over all 2^n equiprobable toss
/// sequences, by exhaustive enumeration.  Requires 1 <= n <= kCoinTossMaxN.
Rational coin_toss_oracle(std::uint64_t n, std::uint64_t k);

struct PartialSumBound {
  Natural lhs;  // sum_{j=0}^{k} C(n,j), exact
  double rhs;   // 2^n * exp(-(n-2k)^2 / (2n))
};

/// Both sides of the binomial partial-sum bound; lhs <= rhs is guaranteed.
/// Requires n >= 1 and k <= n/2.
PartialSumBound partial_sum_bound(std::uint64_t n, std::uint64_t k);

}  // namespace monocheb

#endif  // MONOCHEB_COMBINATORICS_HPP
