// SPDX-License-Identifier: Apache-2.0
#ifndef GKDIM_SCALAR_HPP
#define GKDIM_SCALAR_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gkdim/mpoly.hpp"
#include "gkdim/rational.hpp"

namespace gkdim {

/// Element of Q(t_1..t_r) in canonical form: gcd(num, den) = 1 and the
/// denominator is monic under grlex. Zero is 0/1.
class RationalFunction {
public:
  explicit RationalFunction(int nvars)
      : num_(MPoly(nvars)), den_(MPoly::constant(nvars, Rational(1))) {}
  RationalFunction(MPoly num, MPoly den);

  static RationalFunction constant(int nvars, const Rational& c) {
    return RationalFunction(MPoly::constant(nvars, c),
                            MPoly::constant(nvars, Rational(1)));
  }
  static RationalFunction variable(int nvars, int i) {
    return RationalFunction(MPoly::variable(nvars, i),
                            MPoly::constant(nvars, Rational(1)));
  }

  int nvars() const { return num_.nvars(); }
  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

  std::string to_string() const;

private:
  void normalize();
  MPoly num_, den_;
};

/// Element of the base field k. The field descriptor `trans` is the number
/// of transcendentals: trans = 0 is Q (Rational arm), trans >= 1 is
/// Q(t_1..t_trans) (RationalFunction arm). Scalars from different fields
/// never mix.
class Scalar {
public:
  Scalar() : trans_(0), v_(Rational(0)) {}

  static Scalar zero(int trans) { return integer(0, trans); }
  static Scalar one(int trans) { return integer(1, trans); }
  static Scalar integer(long n, int trans);
  static Scalar from_rational(const Rational& q, int trans);
  static Scalar from_rf(RationalFunction rf);
  static Scalar transcendental(int i, int trans);  // t_{i+1}, 0-based

  int field() const { return trans_; }
  bool is_zero() const;
  bool is_one() const { return *this == one(trans_); }

  /// The Rational arm (field() == 0 only).
  const Rational& rational() const;
  /// The RationalFunction arm (field() >= 1 only).
  const RationalFunction& rational_function() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string to_string() const;
  /// True when to_string() needs parentheses to act as a coefficient factor.
  bool needs_parens() const;
  /// The value as a plain rational when it is one (any field descriptor).
  std::optional<Rational> as_constant_rational() const;

private:
  static void check_same_field(const Scalar& a, const Scalar& b);
  int trans_;
  std::variant<Rational, RationalFunction> v_;
};

/// A nontrivial rational dependency c with sum_i c_i * values_i = 0, if one
/// exists. Values must share a field descriptor and be nonempty.
std::optional<std::vector<Rational>> q_linear_dependency(const std::vector<Scalar>& values);

/// True iff no nontrivial rational combination of the values vanishes.
bool q_linear_independent(const std::vector<Scalar>& values);

}  // namespace gkdim

#endif
