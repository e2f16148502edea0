// Exact arbitrary-precision arithmetic: nonnegative integers (Natural) and
// rationals kept in lowest terms (Rational), backed by GMP.
//
// Rational stays reduced after every operation, so value equality between two
// independently computed quantities is a usable test oracle.  Conversion to
// double rounds to nearest (ties to even) on the quotient of scaled integers
// and is accurate to 1 ulp including the subnormal range.

#ifndef MONOCHEB_RATIONAL_HPP
#define MONOCHEB_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace monocheb {

/// Arbitrary-precision nonnegative integer.
class Natural {
 public:
  Natural() : v_(0) {}
  Natural(unsigned long v) : v_(v) {}
  explicit Natural(mpz_class v);  // rejects negative values

  static Natural pow2(unsigned long e);

  Natural& operator+=(const Natural& o);
  Natural& operator*=(const Natural& o);
  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend Natural operator*(Natural a, const Natural& b) { return a *= b; }

  std::strong_ordering operator<=>(const Natural& o) const;
  bool operator==(const Natural& o) const { return v_ == o.v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  std::string str() const { return v_.get_str(); }
  double to_double() const;  // round to nearest, ties to even
  const mpz_class& value() const { return v_; }

 private:
  mpz_class v_;
};

struct SignedLog2 {
  int sign = 0;         // -1, 0, +1
  double log2_abs = 0;  // log2 of the magnitude; meaningless when sign == 0
};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long num) : v_(num) {}
  Rational(long num, unsigned long den);
  Rational(const Natural& num, const Natural& den);
  explicit Rational(mpq_class v);

  /// Exact value of a finite double (every binary64 value is dyadic).
  static Rational from_double(double x);

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // rejects division by zero
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  Rational abs() const;
  Rational pow(std::uint64_t e) const;  // exponentiation by squaring; 0^0 = 1

  std::strong_ordering operator<=>(const Rational& o) const;
  bool operator==(const Rational& o) const { return v_ == o.v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  /// Reduced "p/q" (plain "p" when q == 1).
  std::string str() const { return v_.get_str(); }
  double to_double() const;     // round to nearest, ties to even
  SignedLog2 log2_view() const; // (sign, log2 |value|) for magnitudes outside double range

 private:
  mpq_class v_;
};

}  // namespace monocheb

#endif  // MONOCHEB_RATIONAL_HPP
