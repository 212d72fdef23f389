// SPDX-License-Identifier: Apache-2.0
#include "gkdim/scalar.hpp"

#include <algorithm>
#include <set>

namespace gkdim {

RationalFunction::RationalFunction(MPoly num, MPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = MPoly::constant(num_.nvars(), Rational(1));
    return;
  }
  MPoly g = mpoly_gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = mpoly_exact_div(num_, g);
    den_ = mpoly_exact_div(den_, g);
  }
  // Monic denominator under grlex fixes the representative.
  Rational lc = den_.leading_coeff();
  if (!lc.is_one()) {
    Rational inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r(nvars());
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  // Cross-cancel first to keep the gcd inputs small.
  MPoly g1 = mpoly_gcd(a.num_, b.den_);
  MPoly g2 = mpoly_gcd(b.num_, a.den_);
  MPoly n1 = g1.is_constant() ? a.num_ : mpoly_exact_div(a.num_, g1);
  MPoly d2 = g1.is_constant() ? b.den_ : mpoly_exact_div(b.den_, g1);
  MPoly n2 = g2.is_constant() ? b.num_ : mpoly_exact_div(b.num_, g2);
  MPoly d1 = g2.is_constant() ? a.den_ : mpoly_exact_div(a.den_, g2);
  return RationalFunction(n1 * n2, d1 * d2);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero())
    throw Error(ErrorKind::DivisionByZero, "rational function division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) {
    // den is monic constant 1 by normalization.
    return num_.to_string();
  }
  std::string n = num_.to_string();
  std::string d = den_.to_string();
  if (num_.term_count() > 1 || num_.leading_coeff().sign() < 0) n = "(" + n + ")";
  if (den_.term_count() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

Scalar Scalar::integer(long n, int trans) {
  return from_rational(Rational(n), trans);
}

Scalar Scalar::from_rational(const Rational& q, int trans) {
  Scalar s;
  s.trans_ = trans;
  if (trans == 0) {
    s.v_ = q;
  } else {
    s.v_ = RationalFunction::constant(trans, q);
  }
  return s;
}

Scalar Scalar::from_rf(RationalFunction rf) {
  Scalar s;
  s.trans_ = rf.nvars();
  if (s.trans_ == 0) {
    s.v_ = rf.num().constant_value();  // den monic constant
  } else {
    s.v_ = std::move(rf);
  }
  return s;
}

Scalar Scalar::transcendental(int i, int trans) {
  if (i < 0 || i >= trans)
    throw Error(ErrorKind::IndexOutOfRange, "transcendental index out of range");
  Scalar s;
  s.trans_ = trans;
  s.v_ = RationalFunction::variable(trans, i);
  return s;
}

bool Scalar::is_zero() const {
  if (trans_ == 0) return std::get<Rational>(v_).is_zero();
  return std::get<RationalFunction>(v_).is_zero();
}

const Rational& Scalar::rational() const {
  if (trans_ != 0) throw Error(ErrorKind::Internal, "scalar is not a plain rational");
  return std::get<Rational>(v_);
}

const RationalFunction& Scalar::rational_function() const {
  if (trans_ == 0) throw Error(ErrorKind::Internal, "scalar is a plain rational");
  return std::get<RationalFunction>(v_);
}

void Scalar::check_same_field(const Scalar& a, const Scalar& b) {
  if (a.trans_ != b.trans_)
    throw Error(ErrorKind::FieldMismatch,
                "scalars from different fields: Q(t_1..t_" + std::to_string(a.trans_) +
                    ") vs Q(t_1..t_" + std::to_string(b.trans_) + ")");
}

Scalar Scalar::operator-() const {
  Scalar s;
  s.trans_ = trans_;
  if (trans_ == 0) s.v_ = -std::get<Rational>(v_);
  else s.v_ = -std::get<RationalFunction>(v_);
  return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar::check_same_field(a, b);
  Scalar s;
  s.trans_ = a.trans_;
  if (a.trans_ == 0) s.v_ = std::get<Rational>(a.v_) + std::get<Rational>(b.v_);
  else s.v_ = std::get<RationalFunction>(a.v_) + std::get<RationalFunction>(b.v_);
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar::check_same_field(a, b);
  Scalar s;
  s.trans_ = a.trans_;
  if (a.trans_ == 0) s.v_ = std::get<Rational>(a.v_) - std::get<Rational>(b.v_);
  else s.v_ = std::get<RationalFunction>(a.v_) - std::get<RationalFunction>(b.v_);
  return s;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar::check_same_field(a, b);
  Scalar s;
  s.trans_ = a.trans_;
  if (a.trans_ == 0) s.v_ = std::get<Rational>(a.v_) * std::get<Rational>(b.v_);
  else s.v_ = std::get<RationalFunction>(a.v_) * std::get<RationalFunction>(b.v_);
  return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  Scalar::check_same_field(a, b);
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "scalar division by zero");
  Scalar s;
  s.trans_ = a.trans_;
  if (a.trans_ == 0) s.v_ = std::get<Rational>(a.v_) / std::get<Rational>(b.v_);
  else s.v_ = std::get<RationalFunction>(a.v_) / std::get<RationalFunction>(b.v_);
  return s;
}

Scalar Scalar::inverse() const {
  return one(trans_) / *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.trans_ != b.trans_) return false;
  if (a.trans_ == 0) return std::get<Rational>(a.v_) == std::get<Rational>(b.v_);
  return std::get<RationalFunction>(a.v_) == std::get<RationalFunction>(b.v_);
}

std::string Scalar::to_string() const {
  if (trans_ == 0) return std::get<Rational>(v_).to_string();
  return std::get<RationalFunction>(v_).to_string();
}

bool Scalar::needs_parens() const {
  const std::string s = to_string();
  return s.find_first_of("+-*/ ") != std::string::npos;
}

std::optional<Rational> Scalar::as_constant_rational() const {
  if (trans_ == 0) return std::get<Rational>(v_);
  const RationalFunction& rf = std::get<RationalFunction>(v_);
  if (rf.is_polynomial() && rf.num().is_constant()) return rf.num().constant_value();
  return std::nullopt;
}

std::optional<std::vector<Rational>> q_linear_dependency(const std::vector<Scalar>& values) {
  if (values.empty())
    throw Error(ErrorKind::Input, "q_linear_dependency on empty list");
  const int trans = values.front().field();
  for (const Scalar& v : values)
    if (v.field() != trans)
      throw Error(ErrorKind::FieldMismatch, "mixed field descriptors");

  const std::size_t k = values.size();

  // Clear denominators to a common polynomial denominator; a rational
  // dependency among the values is the same as one among the resulting
  // polynomials. Then match coefficients monomial by monomial.
  std::vector<MPoly> polys;
  std::vector<Expvec> monomials;
  if (trans == 0) {
    MPoly one(0);
    for (const Scalar& v : values) polys.push_back(MPoly::constant(0, v.rational()));
    monomials.push_back(Expvec{});
  } else {
    MPoly common = MPoly::constant(trans, Rational(1));
    for (const Scalar& v : values) {
      const MPoly& d = v.rational_function().den();
      MPoly g = mpoly_gcd(common, d);
      common = common * (g.is_constant() ? d : mpoly_exact_div(d, g));
    }
    for (const Scalar& v : values) {
      const RationalFunction& rf = v.rational_function();
      polys.push_back(rf.num() * mpoly_exact_div(common, rf.den()));
    }
    std::set<Expvec> monoset;
    for (const MPoly& p : polys)
      for (const auto& [e, c] : p.terms()) monoset.insert(e);
    monomials.assign(monoset.begin(), monoset.end());
  }

  // Rows of the linear system over Q: one column per value, one row per
  // monomial. Dependencies are the kernel of the column span.
  const std::size_t rows = std::max<std::size_t>(monomials.size(), 1);
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(k, Rational(0)));
  for (std::size_t j = 0; j < k; ++j) {
    if (trans == 0) {
      m[0][j] = polys[j].constant_value();
    } else {
      for (std::size_t i = 0; i < monomials.size(); ++i) {
        auto it = polys[j].terms().find(monomials[i]);
        if (it != polys[j].terms().end()) m[i][j] = it->second;
      }
    }
  }

  // Gauss-Jordan on the small k-column system, tracking pivot columns.
  std::vector<int> pivot_col_of_row;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = m[r][c].inverse();
    for (std::size_t j = c; j < k; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < k; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col_of_row.push_back(static_cast<int>(c));
    ++r;
  }

  if (pivot_col_of_row.size() == k) return std::nullopt;

  // Build one kernel vector from the first free column.
  std::vector<bool> is_pivot(k, false);
  for (int c : pivot_col_of_row) is_pivot[c] = true;
  std::size_t free_col = 0;
  while (free_col < k && is_pivot[free_col]) ++free_col;

  std::vector<Rational> dep(k, Rational(0));
  dep[free_col] = Rational(1);
  for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i)
    dep[pivot_col_of_row[i]] = -m[i][free_col];

  // Scale to integers for a readable witness.
  mpz_class den_lcm = 1;
  for (const Rational& c : dep)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
  for (Rational& c : dep) c *= Rational(den_lcm);
  return dep;
}

bool q_linear_independent(const std::vector<Scalar>& values) {
  return !q_linear_dependency(values).has_value();
}

}  // namespace gkdim
