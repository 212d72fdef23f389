// SPDX-License-Identifier: Apache-2.0
#ifndef GKDIM_PARSE_HPP
#define GKDIM_PARSE_HPP

#include <string>

#include "gkdim/ore.hpp"

namespace gkdim {

/// Parsing context: the ambient algebra, whether the Ore variable `x` is in
/// scope, and the derivation used to normalize products in R.
struct ParseContext {
  Ambient amb;
  bool allow_x = false;
  DerivationSpec der;

  static ParseContext for_K(Ambient amb) {
    return {amb, false, DerivationSpec::zero(amb.nvars, amb.trans)};
  }
  static ParseContext for_R(Ambient amb, DerivationSpec der) {
    return {amb, true, std::move(der)};
  }
  static ParseContext for_scalar(int trans) {
    return {Ambient{0, static_cast<std::int32_t>(trans)}, false, DerivationSpec::zero(0, trans)};
  }
};

/// Grammar: integers, `a/b` rationals, `t1..tr`, `x1..xn` with integer
/// exponents (negative allowed on x_i only), `x` with nonnegative exponents
/// when the context is R, `+ - * /` and parentheses. `/` requires
/// scalar-valued operands on the right. Errors carry line/column positions.
OreElement parse_element(const std::string& text, const ParseContext& ctx);

/// As parse_element, but the result must lie in K_n (x-degree <= 0).
LaurentPoly parse_laurent(const std::string& text, const ParseContext& ctx);

/// Scalar literal over Q(t_1..t_trans).
Scalar parse_scalar(const std::string& text, int trans);

}  // namespace gkdim

#endif
