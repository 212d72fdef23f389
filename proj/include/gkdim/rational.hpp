// SPDX-License-Identifier: Apache-2.0
#ifndef GKDIM_RATIONAL_HPP
#define GKDIM_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "gkdim/errors.hpp"

namespace gkdim {

/// Arbitrary-precision rational in canonical form: gcd(|num|, den) = 1,
/// den > 0, zero is 0/1. Backed by GMP.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit on purpose
  Rational(long num, long den) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpz_class& z) : v_(z) {}
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  static Rational from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
      throw Error(ErrorKind::Input, "bad rational literal: " + s);
    if (q.get_den() == 0)
      throw Error(ErrorKind::DivisionByZero, "rational with zero denominator: " + s);
    q.canonicalize();
    return Rational(std::move(q));
  }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    return Rational(mpq_class(1) / v_);
  }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  bool is_integer() const { return v_.get_den() == 1; }

  /// Exact conversion; throws Overflow when the value is not an integer
  /// fitting in 64 bits.
  std::int64_t to_int64() const {
    if (!is_integer()) throw Error(ErrorKind::Overflow, "rational is not an integer");
    mpz_class n = v_.get_num();
    if (!n.fits_slong_p()) throw Error(ErrorKind::Overflow, "integer exceeds 64 bits");
    return static_cast<std::int64_t>(n.get_si());
  }

  std::string to_string() const { return v_.get_str(); }

  const mpq_class& raw() const { return v_; }

private:
  mpq_class v_;
};

inline Rational rational_gcd(const Rational& a, const Rational& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
  return Rational(mpq_class(g, l));
}

/// Binomial coefficient C(n, k) as an exact rational.
inline Rational binomial(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

}  // namespace gkdim

#endif
