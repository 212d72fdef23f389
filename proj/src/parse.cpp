// SPDX-License-Identifier: Apache-2.0
#include "gkdim/parse.hpp"

#include <cctype>
#include <optional>

namespace gkdim {

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= src_.size()) {
      tok_ = {Tok::End, "", line_, col_};
      return;
    }
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
        ++col_;
      }
      tok_ = {Tok::Int, src_.substr(start, pos_ - start), tok_.line, tok_.col};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])))) {
        ++pos_;
        ++col_;
      }
      tok_ = {Tok::Ident, src_.substr(start, pos_ - start), tok_.line, tok_.col};
      return;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default:
        throw SyntaxError(line_, col_, std::string("unexpected character '") + c + "'");
    }
    ++pos_;
    ++col_;
    tok_ = {kind, std::string(1, c), tok_.line, tok_.col};
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_{Tok::End, "", 1, 1};
};

class Parser {
public:
  Parser(const std::string& text, const ParseContext& ctx) : lex_(text), ctx_(ctx) {}

  OreElement parse() {
    OreElement v = expr(0);
    const Token& t = lex_.peek();
    if (t.kind != Tok::End)
      throw SyntaxError(t.line, t.col, "unexpected trailing input '" + t.text + "'");
    return v;
  }

private:
  static int precedence(Tok k) {
    switch (k) {
      case Tok::Plus:
      case Tok::Minus: return 1;
      case Tok::Star:
      case Tok::Slash: return 2;
      default: return -1;
    }
  }

  OreElement expr(int min_prec) {
    OreElement lhs = unary();
    while (true) {
      const Token op = lex_.peek();
      const int prec = precedence(op.kind);
      if (prec < 0 || prec < min_prec) break;
      lex_.next();
      OreElement rhs = expr(prec + 1);
      switch (op.kind) {
        case Tok::Plus: lhs += rhs; break;
        case Tok::Minus: lhs -= rhs; break;
        case Tok::Star: lhs = lhs * rhs; break;
        case Tok::Slash: lhs = divide(lhs, rhs, op); break;
        default: break;
      }
    }
    return lhs;
  }

  OreElement unary() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Minus) {
      lex_.next();
      return -unary();
    }
    if (t.kind == Tok::Plus) {
      lex_.next();
      return unary();
    }
    return primary();
  }

  OreElement primary() {
    Token t = lex_.next();
    switch (t.kind) {
      case Tok::Int: {
        Rational q = Rational::from_string(t.text);
        return scalar_elem(Scalar::from_rational(q, ctx_.amb.trans));
      }
      case Tok::Ident:
        return identifier(t);
      case Tok::LParen: {
        OreElement v = expr(0);
        Token close = lex_.next();
        if (close.kind != Tok::RParen)
          throw SyntaxError(close.line, close.col, "expected ')'");
        if (lex_.peek().kind == Tok::Caret) {
          const Token& caret = lex_.peek();
          throw SyntaxError(caret.line, caret.col,
                            "exponents apply to variables only, not parenthesized expressions");
        }
        return v;
      }
      default:
        throw SyntaxError(t.line, t.col, "expected a number, variable, or '('");
    }
  }

  OreElement identifier(const Token& t) {
    const std::string& name = t.text;
    if (name == "x") {
      if (!ctx_.allow_x)
        throw SyntaxError(t.line, t.col, "'x' is only available over the Ore extension R");
      int e = exponent_or(1, t, /*ore_var=*/true);
      return OreElement::x_power(ctx_.amb, ctx_.der, e);
    }
    if (name.size() >= 2 && (name[0] == 'x' || name[0] == 't') && all_digits(name.substr(1))) {
      if (name.size() > 8)
        throw SyntaxError(t.line, t.col, "unknown identifier '" + name + "'");
      const int idx = std::stoi(name.substr(1));
      if (name[0] == 'x') {
        if (idx < 1 || idx > ctx_.amb.nvars)
          throw SyntaxError(t.line, t.col,
                            "unknown variable '" + name + "' (have x1..x" +
                                std::to_string(ctx_.amb.nvars) + ")");
        int e = exponent_or(1, t, /*ore_var=*/false);
        return laurent_elem(LaurentPoly::variable(ctx_.amb, idx - 1, e));
      }
      if (idx < 1 || idx > ctx_.amb.trans)
        throw SyntaxError(t.line, t.col,
                          "unknown transcendental '" + name + "' (have t1..t" +
                              std::to_string(ctx_.amb.trans) + ")");
      int e = exponent_or(1, t, /*ore_var=*/false);
      if (e < 0)
        throw SyntaxError(t.line, t.col, "negative exponents apply to x variables only");
      Scalar base = Scalar::transcendental(idx - 1, ctx_.amb.trans);
      Scalar v = Scalar::one(ctx_.amb.trans);
      for (int i = 0; i < e; ++i) v *= base;
      return scalar_elem(v);
    }
    throw SyntaxError(t.line, t.col, "unknown identifier '" + name + "'");
  }

  /// Consume `^ [-] INT` if present; `ore_var` selects the error kind for
  /// negative exponents on x.
  int exponent_or(int dflt, const Token& var_tok, bool ore_var) {
    if (lex_.peek().kind != Tok::Caret) return dflt;
    lex_.next();
    bool neg = false;
    if (lex_.peek().kind == Tok::Minus) {
      lex_.next();
      neg = true;
    }
    Token num = lex_.next();
    if (num.kind != Tok::Int)
      throw SyntaxError(num.line, num.col, "expected an integer exponent");
    if (num.text.size() > 8)
      throw SyntaxError(num.line, num.col, "exponent out of range");
    long e = std::stol(num.text);
    if (neg) e = -e;
    if (e < INT16_MIN || e > INT16_MAX)
      throw SyntaxError(num.line, num.col, "exponent out of range");
    if (ore_var && e < 0)
      throw Error(ErrorKind::NegativeOrePower,
                  "x is not invertible in K_n[x, delta] (line " + std::to_string(var_tok.line) +
                      ", col " + std::to_string(var_tok.col) + ")");
    return static_cast<int>(e);
  }

  static bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  }

  OreElement scalar_elem(const Scalar& s) {
    return laurent_elem(LaurentPoly::constant(ctx_.amb, s));
  }

  OreElement laurent_elem(const LaurentPoly& f) {
    return OreElement::from_laurent(f, ctx_.der);
  }

  OreElement divide(const OreElement& lhs, const OreElement& rhs, const Token& op) {
    auto as_scalar = [&](const OreElement& v) -> std::optional<Scalar> {
      if (v.deg_x() > 0) return std::nullopt;
      LaurentPoly f = v.coeff(0);
      if (!f.is_constant()) return std::nullopt;
      return f.constant_value();
    };
    std::optional<Scalar> den = as_scalar(rhs);
    if (!den.has_value())
      throw SyntaxError(op.line, op.col, "division requires a scalar divisor");
    if (den->is_zero())
      throw Error(ErrorKind::DivisionByZero,
                  "division by zero (line " + std::to_string(op.line) + ", col " +
                      std::to_string(op.col) + ")");
    std::optional<Scalar> num = as_scalar(lhs);
    if (num.has_value()) return scalar_elem(*num / *den);
    return lhs.scaled(den->inverse());
  }

  Lexer lex_;
  const ParseContext& ctx_;
};

}  // namespace

OreElement parse_element(const std::string& text, const ParseContext& ctx) {
  return Parser(text, ctx).parse();
}

LaurentPoly parse_laurent(const std::string& text, const ParseContext& ctx) {
  OreElement v = parse_element(text, ctx);
  if (v.deg_x() > 0)
    throw SyntaxError(1, 1, "expression must lie in K_n (no Ore variable)");
  return v.coeff(0);
}

Scalar parse_scalar(const std::string& text, int trans) {
  LaurentPoly f = parse_laurent(text, ParseContext::for_scalar(trans));
  if (!f.is_constant()) throw SyntaxError(1, 1, "expected a scalar expression");
  return f.constant_value();
}

}  // namespace gkdim
