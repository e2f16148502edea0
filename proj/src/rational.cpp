#include "monocheb/rational.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace monocheb {

namespace {

std::strong_ordering from_cmp(int c) {
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// Correctly rounded a/b for a >= 0, b > 0 (round to nearest, ties to even).
// Scales a/b so the integer quotient carries 54..56 bits, rounds that
// quotient to 53 bits using the division remainder as the sticky bit, then
// applies the binary exponent with ldexp.
double quotient_to_double(const mpz_class& a, const mpz_class& b) {
  if (sgn(a) == 0) return 0.0;

  const long ea = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2));
  const long eb = static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 2));
  const long shift = 55 - (ea - eb);

  mpz_class num = a;
  mpz_class den = b;
  if (shift >= 0) {
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(shift));
  } else {
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(-shift));
  }

  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());

  const long qbits = static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 2));
  const long drop = qbits - 53;  // >= 1 by the choice of shift

  mpz_class mantissa, low;
  mpz_tdiv_q_2exp(mantissa.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(drop));
  mpz_tdiv_r_2exp(low.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(drop));

  mpz_class half;
  mpz_setbit(half.get_mpz_t(), static_cast<unsigned long>(drop - 1));

  const int c = cmp(low, half);
  const bool sticky = sgn(r) != 0;
  if (c > 0 || (c == 0 && (sticky || mpz_odd_p(mantissa.get_mpz_t())))) {
    mantissa += 1;
  }

  const long exponent = drop - shift;
  if (exponent < -1200) return 0.0;
  if (exponent > 1200) return std::numeric_limits<double>::infinity();
  return std::ldexp(mantissa.get_d(), static_cast<int>(exponent));
}

}  // namespace

Natural::Natural(mpz_class v) : v_(std::move(v)) {
  if (sgn(v_) < 0) throw std::domain_error("Natural: negative value");
}

Natural Natural::pow2(unsigned long e) {
  mpz_class v;
  mpz_setbit(v.get_mpz_t(), e);
  return Natural(std::move(v));
}

Natural& Natural::operator+=(const Natural& o) {
  v_ += o.v_;
  return *this;
}

Natural& Natural::operator*=(const Natural& o) {
  v_ *= o.v_;
  return *this;
}

std::strong_ordering Natural::operator<=>(const Natural& o) const {
  return from_cmp(cmp(v_, o.v_));
}

double Natural::to_double() const { return quotient_to_double(v_, 1); }

Rational::Rational(long num, unsigned long den) : v_(num, den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(const Natural& num, const Natural& den)
    : v_(num.value(), den.value()) {
  if (den.is_zero()) throw std::domain_error("Rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
  if (sgn(v_.get_den()) == 0) throw std::domain_error("Rational: zero denominator");
  v_.canonicalize();
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("Rational: non-finite double");
  return Rational(mpq_class(x));
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

Rational Rational::pow(std::uint64_t e) const {
  // Numerator and denominator are coprime, so their powers are too; no
  // re-canonicalization needed.
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), e);
  Rational r;
  r.v_ = mpq_class(num, den);
  return r;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  return from_cmp(cmp(v_, o.v_));
}

double Rational::to_double() const {
  const double mag = quotient_to_double(::abs(v_.get_num()), v_.get_den());
  return sign() < 0 ? -mag : mag;
}

SignedLog2 Rational::log2_view() const {
  SignedLog2 out;
  out.sign = sign();
  if (out.sign == 0) {
    out.log2_abs = -std::numeric_limits<double>::infinity();
    return out;
  }
  long en = 0, ed = 0;
  const double dn = mpz_get_d_2exp(&en, mpq_class(::abs(v_)).get_num().get_mpz_t());
  const double dd = mpz_get_d_2exp(&ed, v_.get_den().get_mpz_t());
  out.log2_abs = (std::log2(dn) + static_cast<double>(en)) -
                 (std::log2(dd) + static_cast<double>(ed));
  return out;
}

}  // namespace monocheb
