// Error quantification for the truncated monomial expansion and minimal
// degree selection.
//
// The sup-norm error of the degree-k truncation phi_k of x^n on [-1,1] is
// exactly p_{n,k} (attained at x = 1), is bounded by the concentration
// inequality 2 exp(-k^2/2n), and behaves like the erfc-based estimates
// reported alongside it.  Inverting the bound for a tolerance eps gives the
// degree rule k >= sqrt(2 n ln(2/eps)); the exact selector refines that to
// the minimal k by binary search on the monotone exact error.
//
// The erfc-based values are asymptotic estimates, not bounds; the companion
// lower bound p_{n,k}/(4e) <= E_{n,k} for the true best approximation is
// documentation only (computing the best approximant needs a Remez solver,
// out of scope here).

#ifndef MONOCHEB_APPROX_ERROR_HPP
#define MONOCHEB_APPROX_ERROR_HPP

#include <cstdint>

#include "monocheb/rational.hpp"

namespace monocheb {

/// Largest n for which exact big-integer summation is used; beyond it the
/// float log-space path takes over and results are flagged approximate.
inline constexpr std::uint64_t kExactPathLimit = 5000;

struct ErrorReport {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  Rational exact;                  // p_{n,k}; zero placeholder when approximate
  double exact_float = 0;         // float(p_{n,k}), or exp(log-space value)
  bool exact_is_approx = false;   // true when n > kExactPathLimit
  double hoeffding = 0;           // 2 exp(-k^2/2n)
  double erfc_p_estimate = 0;     // 2 erfc(k/sqrt(n))
  double erfc_best_estimate = 0;  // (1/2) erfc(k/sqrt(n))
};

enum class DegreeMethod { bound, exact };

struct DegreePlan {
  std::uint64_t n = 0;
  double epsilon = 0;
  std::uint64_t k = 0;
  DegreeMethod method = DegreeMethod::bound;
  Rational achieved;               // p_{n,k} at the selected k
  double achieved_float = 0;
  bool achieved_is_approx = false; // log-space float path used for achieved
};

/// Exact sup-norm error ||x^n - phi_k||_inf = p_{n,k}.  Requires k <= n.
Rational exact_error(std::uint64_t n, std::uint64_t k);

/// 2 exp(-k^2 / 2n).
double hoeffding_bound(std::uint64_t n, std::uint64_t k);

/// Complementary error function by rational approximation; absolute error
/// below 1.5e-7 for all finite z.
double erfc(double z);

/// ln p_{n,k} evaluated in float log-space (log-sum-exp over log-binomials
/// via lgamma); -inf when k = n.  Relative accuracy of exp(result) is about
/// 1e-12 for n up to 10^6.
double log_p_float(std::uint64_t n, std::uint64_t k);

/// All error quantities for one (n, k) pair.
ErrorReport estimates(std::uint64_t n, std::uint64_t k);

/// Degree from the closed-form rule k = min(n, ceil(sqrt(2 n ln(2/eps)))).
/// Requires 0 < eps <= 1.
DegreePlan select_degree_bound(std::uint64_t n, double epsilon);

/// Minimal k with p_{n,k} <= eps, by binary search against the exact value
/// (eps compared as its exact binary64 rational).  Requires 0 < eps <= 1 and
/// n <= kExactPathLimit.
DegreePlan select_degree_exact(std::uint64_t n, double epsilon);

/// max over cheb_nodes(m) augmented with {-1, 1} of |x^n - phi_k(x)|, with
/// x^n by float exponentiation-by-squaring and phi_k by Clenshaw.  The
/// endpoints are always included because the sup is attained at x = 1.
/// Requires m >= 2.
double grid_sup_error(std::uint64_t n, std::uint64_t k, std::uint64_t m);

/// x^e by exponentiation-by-squaring in double arithmetic.
double pow_by_squaring(double x, std::uint64_t e);

}  // namespace monocheb

#endif  // MONOCHEB_APPROX_ERROR_HPP
