#include "monocheb/matpow.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "monocheb/approx_error.hpp"
#include "monocheb/cheb_series.hpp"

namespace monocheb {

SymMatrix::SymMatrix(std::size_t dim)
    : dim_(dim), entries_(dim * dim, 0.0) {
  if (dim == 0) throw std::invalid_argument("SymMatrix: dim must be positive");
}

SymMatrix::SymMatrix(std::size_t dim, std::vector<double> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim == 0) throw std::invalid_argument("SymMatrix: dim must be positive");
  if (entries_.size() != dim * dim)
    throw std::invalid_argument("SymMatrix: entry count != dim*dim");
}

SymMatrix SymMatrix::diagonal(std::span<const double> d) {
  SymMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

double SymMatrix::max_asymmetry() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      worst = std::max(worst, std::fabs(at(i, j) - at(j, i)));
  return worst;
}

double SymMatrix::infinity_norm() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) row += std::fabs(at(i, j));
    worst = std::max(worst, row);
  }
  return worst;
}

void SymMatrix::apply(std::span<const double> x, std::span<double> y) const {
  for (std::size_t i = 0; i < dim_; ++i) {
    double s = 0.0;
    const double* row = entries_.data() + i * dim_;
    for (std::size_t j = 0; j < dim_; ++j) s += row[j] * x[j];
    y[i] = s;
  }
}

namespace {

void check_apply_args(std::size_t dim, std::span<const double> v,
                      std::uint64_t n, std::uint64_t k) {
  if (v.size() != dim)
    throw std::invalid_argument("cheb_matpow: vector length != matrix dim");
  if (n == 0) throw std::domain_error("cheb_matpow: n must be positive");
  if (k > n) throw std::domain_error("cheb_matpow: k > n");
}

void check_symmetric(const SymMatrix& a) {
  if (a.max_asymmetry() > kSymmetryTol)
    throw std::invalid_argument("cheb_matpow: matrix asymmetry beyond tolerance");
}

}  // namespace

MatPowResult cheb_matpow(const MatVecFn& apply, std::size_t dim,
                         std::span<const double> v, std::uint64_t n,
                         std::uint64_t k) {
  check_apply_args(dim, v, n, k);

  std::vector<double> coeffs = monomial_expansion(n).truncate(k).float_coeffs();
  coeffs.resize(k + 1, 0.0);  // keep parity zeros: the recurrence runs to j = k
  coeffs[0] *= 0.5;           // primed sum

  MatVecCounter counter;
  std::vector<double> result(dim, 0.0);
  std::vector<double> t_prev(v.begin(), v.end());  // T_0(A) v = v
  for (std::size_t i = 0; i < dim; ++i) result[i] = coeffs[0] * t_prev[i];
  if (k == 0) return {std::move(result), counter.count};

  std::vector<double> t_cur(dim, 0.0);  // T_1(A) v = A v
  apply(t_prev, t_cur);
  counter.bump();
  for (std::size_t i = 0; i < dim; ++i) result[i] += coeffs[1] * t_cur[i];

  std::vector<double> t_next(dim, 0.0);
  for (std::uint64_t j = 2; j <= k; ++j) {
    apply(t_cur, t_next);
    counter.bump();
    for (std::size_t i = 0; i < dim; ++i)
      t_next[i] = 2.0 * t_next[i] - t_prev[i];
    for (std::size_t i = 0; i < dim; ++i) result[i] += coeffs[j] * t_next[i];
    std::swap(t_prev, t_cur);
    std::swap(t_cur, t_next);
  }
  return {std::move(result), counter.count};
}

MatPowResult cheb_matpow(const SymMatrix& a, std::span<const double> v,
                         std::uint64_t n, std::uint64_t k) {
  check_symmetric(a);
  const MatVecFn apply = [&a](std::span<const double> x, std::span<double> y) {
    a.apply(x, y);
  };
  return cheb_matpow(apply, a.dim(), v, n, k);
}

MatPowResult repeated_matpow(const SymMatrix& a, std::span<const double> v,
                             std::uint64_t n) {
  if (v.size() != a.dim())
    throw std::invalid_argument("repeated_matpow: vector length != matrix dim");
  if (n == 0) throw std::domain_error("repeated_matpow: n must be positive");
  MatVecCounter counter;
  std::vector<double> x(v.begin(), v.end());
  std::vector<double> y(a.dim(), 0.0);
  for (std::uint64_t i = 0; i < n; ++i) {
    a.apply(x, y);
    counter.bump();
    std::swap(x, y);
  }
  return {std::move(x), counter.count};
}

AutoMatPowResult auto_matpow(const SymMatrix& a, std::span<const double> v,
                             std::uint64_t n, double epsilon) {
  const DegreePlan plan = n <= kExactPathLimit
                              ? select_degree_exact(n, epsilon)
                              : select_degree_bound(n, epsilon);
  MatPowResult r = cheb_matpow(a, v, n, plan.k);
  return {std::move(r.value), plan.k, r.matvecs};
}

}  // namespace monocheb
