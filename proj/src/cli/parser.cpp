#include "valrv/cli/parser.hpp"

#include <cctype>

#include "valrv/errors.hpp"

namespace valrv::cli {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  ExprAst run() {
    skip();
    if (at_end()) throw ParseError("empty expression", pos_);
    ExprAst e = expr();
    skip();
    if (!at_end()) throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
    return e;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (!at_end() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      skip();
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  static ExprAst node(ExprAst::Kind k, std::size_t pos, std::vector<ExprAst> children = {}) {
    ExprAst e;
    e.kind = k;
    e.pos = pos;
    e.children = std::move(children);
    return e;
  }

  ExprAst expr() {
    ExprAst lhs = term();
    while (true) {
      skip();
      const std::size_t at = pos_;
      if (accept('+'))
        lhs = node(ExprAst::Kind::Add, at, {std::move(lhs), term()});
      else if (accept('-'))
        lhs = node(ExprAst::Kind::Sub, at, {std::move(lhs), term()});
      else
        return lhs;
    }
  }

  ExprAst term() {
    ExprAst lhs = unary();
    while (true) {
      skip();
      const std::size_t at = pos_;
      if (accept('*'))
        lhs = node(ExprAst::Kind::Mul, at, {std::move(lhs), unary()});
      else if (accept('/'))
        lhs = node(ExprAst::Kind::Div, at, {std::move(lhs), unary()});
      else
        return lhs;
    }
  }

  ExprAst unary() {
    skip();
    const std::size_t at = pos_;
    if (accept('-')) return node(ExprAst::Kind::Neg, at, {unary()});
    return power();
  }

  ExprAst power() {
    ExprAst base = primary();
    skip();
    const std::size_t at = pos_;
    if (!accept('^')) return base;
    ExprAst e = node(ExprAst::Kind::Pow, at, {std::move(base)});
    e.exponent = exponent();
    return e;
  }

  BigInt integer() {
    skip();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected an integer", pos_);
    return BigInt(std::string(src_.substr(start, pos_ - start)));
  }

  Rational exponent() {
    if (accept('(')) {
      const bool neg = accept('-');
      Rational q(integer());
      if (accept('/')) {
        skip();
        const std::size_t at = pos_;
        const BigInt d = integer();
        if (d == 0) throw ParseError("zero denominator in exponent", at);
        q /= Rational(d);
      }
      expect(')');
      return neg ? Rational(-q) : q;
    }
    const bool neg = accept('-');
    Rational q(integer());
    return neg ? Rational(-q) : q;
  }

  ExprAst primary() {
    skip();
    const std::size_t at = pos_;
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      ExprAst e = node(ExprAst::Kind::Number, at);
      e.number = integer();
      return e;
    }
    if (accept('(')) {
      ExprAst e = expr();
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < src_.size() && std::isalnum(static_cast<unsigned char>(src_[end]))) ++end;
      const std::string word(src_.substr(pos_, end - pos_));
      if (word == "O") {
        pos_ = end;
        expect('(');
        ExprAst e = node(ExprAst::Kind::BigO, at, {expr()});
        expect(')');
        return e;
      }
      if (word == "t" || word == "pi" || word == "u" || word == "X") {
        pos_ = end;
        ExprAst e = node(ExprAst::Kind::Symbol, at);
        e.symbol = word;
        return e;
      }
      throw ParseError("unknown symbol '" + word + "'", at);
    }
    throw ParseError(std::string("unexpected '") + c + "'", at);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

std::string where(std::size_t pos) { return " at position " + std::to_string(pos); }

bool is_integer(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

std::int64_t small_exponent(const ExprAst& e) {
  if (!is_integer(e.exponent)) throw ParseError("exponent must be an integer here", e.pos);
  const BigInt& n = boost::multiprecision::numerator(e.exponent);
  if (n > 100000 || n < -100000) throw ParseError("exponent out of range", e.pos);
  return static_cast<std::int64_t>(n);
}

Poly constant(const FieldElem& a) { return Poly(a.spec(), {a}); }

FieldElem as_element(const Poly& p, std::size_t pos) {
  if (p.degree() > 0) throw ParseError("expected a field element, found a polynomial in X", pos);
  return p.is_zero() ? FieldElem::zero(p.spec()) : p.coeff(0);
}

Poly poly_pow(const Poly& base, std::int64_t n, std::size_t pos) {
  if (n < 0) {
    const FieldElem a = as_element(base, pos);
    if (a.is_zero_at_precision()) throw ParseError("negative power of zero", pos);
    return poly_pow(constant(a.inverse()), -n, pos);
  }
  Poly acc = constant(FieldElem::one(base.spec()));
  Poly sq = base;
  while (n > 0) {
    if (n & 1) acc = acc * sq;
    n >>= 1;
    if (n > 0) sq = sq * sq;
  }
  return acc;
}

class Evaluator {
 public:
  explicit Evaluator(const FieldSpec& spec) : spec_(spec) {}

  Poly eval(const ExprAst& e) {
    using K = ExprAst::Kind;
    switch (e.kind) {
      case K::Number:
        return constant(FieldElem::from_integer(spec_, e.number));
      case K::Symbol:
        return symbol(e, Rational(1));
      case K::Add:
        return eval(e.children[0]) + eval(e.children[1]);
      case K::Sub:
        return eval(e.children[0]) - eval(e.children[1]);
      case K::Mul:
        return eval(e.children[0]) * eval(e.children[1]);
      case K::Neg:
        return constant(FieldElem::zero(spec_)) - eval(e.children[0]);
      case K::Div: {
        const FieldElem d = as_element(eval(e.children[1]), e.children[1].pos);
        if (d.is_zero_at_precision()) throw ParseError("division by zero", e.pos);
        return eval(e.children[0]) * constant(d.inverse());
      }
      case K::Pow: {
        const ExprAst& base = e.children[0];
        if (base.kind == K::Symbol) return symbol(base, e.exponent);
        return poly_pow(eval(base), small_exponent(e), e.pos);
      }
      case K::BigO: {
        const FieldElem a = as_element(eval(e.children[0]), e.children[0].pos);
        if (!a.is_exact() || a.terms().size() != 1)
          throw ParseError("O(...) takes a single exact monomial", e.pos);
        return constant(FieldElem::big_o(spec_, a.valuation()));
      }
    }
    throw ParseError("malformed expression", e.pos);
  }

 private:
  Poly symbol(const ExprAst& s, const Rational& q) {
    const ResidueElem one = spec_.residue()->one();
    if (s.symbol == "X") {
      if (!is_integer(q) || q < 0) throw ParseError("X takes a non-negative integer exponent", s.pos);
      return Poly::monomial_x(spec_, static_cast<int>(boost::multiprecision::numerator(q)));
    }
    if (s.symbol == "t") {
      if (!spec_.is_series()) throw ParseError("'t' is not available in a p-adic field; use 'pi'", s.pos);
      if (!spec_.lattice().contains(Value(q)))
        throw LatticeError("exponent " + rational_to_string(q) + " is outside " + spec_.lattice().to_string() +
                           where(s.pos));
      return constant(monomial(one, Value(q), spec_));
    }
    if (s.symbol == "pi") {
      if (!spec_.is_padic()) throw ParseError("'pi' is only available in a p-adic field; use 't'", s.pos);
      if (!is_integer(q)) throw LatticeError("pi takes an integer exponent" + where(s.pos));
      return constant(monomial(one, Value(q / spec_.e()), spec_));
    }
    const auto& field = spec_.residue();
    if (!field->is_finite() || field->degree() < 2)
      throw ParseError("'u' needs a residue field of degree at least 2", s.pos);
    if (!is_integer(q)) throw ParseError("u takes an integer exponent", s.pos);
    const ResidueElem u = field->from_digits({0, 1});
    return constant(lift_residue(u.pow(static_cast<std::int64_t>(boost::multiprecision::numerator(q))), spec_));
  }

  const FieldSpec& spec_;
};

}  // namespace

ExprAst parse_expr(std::string_view src) { return Parser(src).run(); }

FieldElem parse_element(std::string_view src, const FieldSpec& spec) {
  const ExprAst ast = parse_expr(src);
  return as_element(Evaluator(spec).eval(ast), 0);
}

Poly parse_poly(std::string_view src, const FieldSpec& spec) { return Evaluator(spec).eval(parse_expr(src)); }

ResidueElem parse_residue(std::string_view src, const ResidueFieldPtr& field) {
  const FieldSpec spec = FieldSpec::series(field, ValueGroupSpec::lattice(1));
  const FieldElem a = parse_element(src, spec);
  if (!a.is_exact()) throw ParseError("residue constants cannot carry O(...)", 0);
  for (const auto& t : a.terms())
    if (t.exp != 0) throw ParseError("residue constants cannot contain t", 0);
  return a.terms().empty() ? field->zero() : a.terms().front().coeff;
}

}  // namespace valrv::cli
