// Chebyshev-basis polynomials with exact rational coefficients.
//
// A ChebSeries holds coefficients c_0..c_m for the primed sum
//     f(x) = c_0/2 + sum_{j=1}^{m} c_j T_j(x),
// i.e. the j = 0 summand is halved.  Every evaluation and conversion in this
// module applies that convention; coefficient accessors return the stored
// (unhalved) c_j.
//
// The monomial x^n has the exact finite expansion with
//     c_j = 2^{1-n} C(n, (n-j)/2)   when n - j is even, 0 otherwise,
// and truncating it beyond j = k gives the near-minimax approximant phi_k.

#ifndef MONOCHEB_CHEB_SERIES_HPP
#define MONOCHEB_CHEB_SERIES_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "monocheb/rational.hpp"

namespace monocheb {

struct EvalResult {
  double value = 0;
  bool out_of_domain = false;  // |x| > 1: value is still the polynomial value,
                               // but the error theory no longer applies
};

class ChebSeries {
 public:
  /// Takes coefficients c_0..c_m; trailing zeros are stripped so that the
  /// leading stored coefficient is nonzero unless the series is identically
  /// zero (kept as the single coefficient c_0 = 0).
  explicit ChebSeries(std::vector<Rational> coeffs);

  /// Keeps the terms j = 0..k.  Requires k <= degree().
  ChebSeries truncate(std::uint64_t k) const;

  /// Backward (Clenshaw) recurrence on the float views of the coefficients.
  EvalResult clenshaw_eval(double x) const;

  /// Same recurrence in exact rational arithmetic.  Intended for
  /// |x| <= 1 (unchecked; the value is defined everywhere).
  Rational eval_exact(const Rational& x) const;

  /// Monomial coefficients a_0..a_m with sum a_i x^i identical to the series,
  /// by exact recurrence on T_{j+1} = 2x T_j - T_{j-1}.  The monomial basis is
  /// ill-conditioned in float, hence the exact arithmetic; degree is capped.
  std::vector<Rational> to_power_basis() const;

  std::uint64_t degree() const { return coeffs_.size() - 1; }

  /// Stored coefficient c_j (0 beyond the degree).
  Rational coeff(std::uint64_t j) const;

  /// Float views of c_0..c_degree, each rounded to nearest.
  std::vector<double> float_coeffs() const;

  /// (sign, log2 |c_j|) view; usable when float(c_j) would underflow.
  SignedLog2 coeff_log2(std::uint64_t j) const;

  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }
  bool operator==(const ChebSeries& o) const = default;

  static constexpr std::uint64_t kPowerBasisMaxDegree = 512;

 private:
  std::vector<Rational> coeffs_;  // index j = 0..degree, trailing entry nonzero
};

/// Exact expansion of x^n in the Chebyshev basis.  Requires n >= 1.
ChebSeries monomial_expansion(std::uint64_t n);

/// T_j as a ChebSeries (for j = 0 the stored coefficient is 2 so the primed
/// sum evaluates to 1).
ChebSeries chebyshev_basis(std::uint64_t j);

/// The m roots of T_m, x_j = cos((2j+1) pi / (2m)), in decreasing order.
/// Computed in the equivalent form sin(pi (m-2j-1) / (2m)) so the grid is
/// exactly symmetric and odd m gives an exact middle zero.
std::vector<double> cheb_nodes(std::uint64_t m);

/// Clenshaw recurrence on a float coefficient span (primed convention).
double clenshaw(std::span<const double> coeffs, double x);

}  // namespace monocheb

#endif  // MONOCHEB_CHEB_SERIES_HPP
