// Matrix-power products A^n v for symmetric A with spectrum in [-1, 1],
// approximated through the truncated monomial expansion: the three-term
// recurrence T_{j+1}(A)v = 2A T_j(A)v - T_{j-1}(A)v needs one matvec per
// term, so phi_k(A)v costs k matvecs instead of n and, by spectral mapping,
//     || A^n v - phi_k(A) v ||_2 <= p_{n,k} ||v||_2
// up to float rounding.
//
// Spectrum containment in [-1, 1] is a caller contract.  infinity_norm() <= 1
// certifies it (Gershgorin), but the converse does not hold, so the library
// only exposes the query; callers decide whether to warn.

#ifndef MONOCHEB_MATPOW_HPP
#define MONOCHEB_MATPOW_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace monocheb {

/// Entrywise tolerance for accepting a matrix as symmetric.
inline constexpr double kSymmetryTol = 1e-12;

/// Dense symmetric matrix, row-major.
class SymMatrix {
 public:
  explicit SymMatrix(std::size_t dim);  // zero matrix
  SymMatrix(std::size_t dim, std::vector<double> entries);
  static SymMatrix diagonal(std::span<const double> d);

  std::size_t dim() const { return dim_; }
  double at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  double& at(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const std::vector<double>& entries() const { return entries_; }

  double max_asymmetry() const;  // max |a_ij - a_ji|
  double infinity_norm() const;  // max absolute row sum

  /// y = A x.  Requires x.size() == y.size() == dim().
  void apply(std::span<const double> x, std::span<double> y) const;

 private:
  std::size_t dim_;
  std::vector<double> entries_;
};

/// Matrix-vector product counter, local to one computation.
struct MatVecCounter {
  std::size_t count = 0;
  void bump() { ++count; }
};

/// Operator form of y = A x for callers with sparse or implicit matrices.
using MatVecFn = std::function<void(std::span<const double> x, std::span<double> y)>;

struct MatPowResult {
  std::vector<double> value;
  std::size_t matvecs = 0;
};

/// phi_k(A) v with the coefficients of the exact degree-n expansion
/// converted to float once per call.  Runs the recurrence through j = k even
/// when c_k = 0 (parity), so matvecs == k for k >= 1 and 0 for k == 0.
/// Requires v.size() == dim, k <= n; the dense overload also rejects
/// asymmetry beyond kSymmetryTol.
MatPowResult cheb_matpow(const SymMatrix& a, std::span<const double> v,
                         std::uint64_t n, std::uint64_t k);
MatPowResult cheb_matpow(const MatVecFn& apply, std::size_t dim,
                         std::span<const double> v, std::uint64_t n,
                         std::uint64_t k);

/// Ground-truth baseline: A^n v by n successive matvecs.
MatPowResult repeated_matpow(const SymMatrix& a, std::span<const double> v,
                             std::uint64_t n);

struct AutoMatPowResult {
  std::vector<double> value;
  std::uint64_t k_used = 0;
  std::size_t matvecs = 0;
};

/// Selects k for the tolerance (exact search when n allows it, the
/// closed-form rule otherwise) and applies cheb_matpow.
AutoMatPowResult auto_matpow(const SymMatrix& a, std::span<const double> v,
                             std::uint64_t n, double epsilon);

}  // namespace monocheb

#endif  // MONOCHEB_MATPOW_HPP
