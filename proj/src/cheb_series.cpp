#include "monocheb/cheb_series.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "monocheb/combinatorics.hpp"

namespace monocheb {

ChebSeries::ChebSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(Rational(0));
  while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ChebSeries ChebSeries::truncate(std::uint64_t k) const {
  if (k > degree()) throw std::domain_error("ChebSeries::truncate: k > degree");
  std::vector<Rational> kept(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(k + 1));
  return ChebSeries(std::move(kept));
}

EvalResult ChebSeries::clenshaw_eval(double x) const {
  EvalResult r;
  r.out_of_domain = std::fabs(x) > 1.0;
  r.value = clenshaw(float_coeffs(), x);
  return r;
}

Rational ChebSeries::eval_exact(const Rational& x) const {
  const std::uint64_t m = degree();
  Rational b1(0), b2(0);
  const Rational two_x = Rational(2) * x;
  for (std::uint64_t j = m; j >= 1; --j) {
    Rational b = two_x * b1 - b2 + coeffs_[j];
    b2 = std::move(b1);
    b1 = std::move(b);
  }
  return x * b1 - b2 + coeffs_[0] / Rational(2);
}

std::vector<Rational> ChebSeries::to_power_basis() const {
  const std::uint64_t m = degree();
  if (m > kPowerBasisMaxDegree)
    throw std::domain_error("ChebSeries::to_power_basis: degree > 512");

  std::vector<Rational> acc(m + 1, Rational(0));
  // T_{j-1} and T_j in the monomial basis, exact integer coefficients.
  std::vector<mpz_class> prev{1};      // T_0
  std::vector<mpz_class> cur{0, 1};    // T_1

  acc[0] = coeffs_[0] * Rational(1, 2);  // c_0/2 * T_0
  for (std::uint64_t j = 1; j <= m; ++j) {
    if (!coeffs_[j].is_zero()) {
      for (std::size_t i = 0; i < cur.size(); ++i) {
        if (sgn(cur[i]) != 0)
          acc[i] += coeffs_[j] * Rational(mpq_class(cur[i]));
      }
    }
    if (j == m) break;
    // T_{j+1} = 2x T_j - T_{j-1}
    std::vector<mpz_class> next(j + 2, mpz_class(0));
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] = 2 * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return acc;
}

Rational ChebSeries::coeff(std::uint64_t j) const {
  if (j >= coeffs_.size()) return Rational(0);
  return coeffs_[j];
}

std::vector<double> ChebSeries::float_coeffs() const {
  std::vector<double> out(coeffs_.size());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) out[j] = coeffs_[j].to_double();
  return out;
}

SignedLog2 ChebSeries::coeff_log2(std::uint64_t j) const {
  return coeff(j).log2_view();
}

ChebSeries monomial_expansion(std::uint64_t n) {
  if (n == 0) throw std::domain_error("monomial_expansion: n must be positive");
  std::vector<Rational> c(n + 1, Rational(0));
  const Natural den = Natural::pow2(static_cast<unsigned long>(n - 1));
  for (std::uint64_t j = n % 2; j <= n; j += 2)
    c[j] = Rational(binomial(n, (n - j) / 2), den);
  return ChebSeries(std::move(c));
}

ChebSeries chebyshev_basis(std::uint64_t j) {
  std::vector<Rational> c(j + 1, Rational(0));
  c[j] = (j == 0) ? Rational(2) : Rational(1);
  return ChebSeries(std::move(c));
}

std::vector<double> cheb_nodes(std::uint64_t m) {
  std::vector<double> nodes(m);
  const double denom = 2.0 * static_cast<double>(m);
  for (std::uint64_t j = 0; j < m; ++j) {
    const auto num = static_cast<double>(static_cast<std::int64_t>(m) -
                                         2 * static_cast<std::int64_t>(j) - 1);
    nodes[j] = std::sin(M_PI * num / denom);
  }
  return nodes;
}

double clenshaw(std::span<const double> coeffs, double x) {
  if (coeffs.empty()) return 0.0;
  double b1 = 0.0, b2 = 0.0;
  const double two_x = 2.0 * x;
  for (std::size_t j = coeffs.size() - 1; j >= 1; --j) {
    const double b = two_x * b1 - b2 + coeffs[j];
    b2 = b1;
    b1 = b;
  }
  return x * b1 - b2 + 0.5 * coeffs[0];
}

}  // namespace monocheb
