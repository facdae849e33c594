#include "valrv/value.hpp"

#include <cctype>
#include <numeric>

#include "valrv/errors.hpp"

namespace valrv {

std::string rational_to_string(const Rational& q) {
  const BigInt& num = boost::multiprecision::numerator(q);
  const BigInt& den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  auto fail = [&](const char* why) -> Rational { throw ParseError(why, i); };
  bool neg = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = text[i] == '-';
    ++i;
  }
  auto read_int = [&]() -> BigInt {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) fail("expected digits");
    return BigInt(std::string(text.substr(start, i - start)));
  };
  BigInt num = read_int();
  BigInt den = 1;
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = read_int();
    if (den == 0) fail("zero denominator");
  }
  if (i != text.size()) fail("trailing characters in rational");
  Rational q(num, den);
  return neg ? Rational(-q) : q;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

const Rational& Value::rational() const {
  if (infinite_) throw DomainError("value is infinite");
  return q_;
}

std::string Value::to_string() const { return infinite_ ? "inf" : rational_to_string(q_); }

Value operator+(const Value& a, const Value& b) {
  if (a.infinite_ || b.infinite_) return Value::infinity();
  return Value(a.q_ + b.q_);
}

Value operator-(const Value& a, const Value& b) {
  if (b.infinite_) throw DomainError("cannot subtract inf");
  if (a.infinite_) return a;
  return Value(a.q_ - b.q_);
}

Value operator-(const Value& a) {
  if (a.infinite_) throw DomainError("cannot negate inf");
  return Value(Rational(-a.q_));
}

Value operator*(std::int64_t n, const Value& v) {
  if (v.infinite_) {
    if (n <= 0) throw DomainError("non-positive multiple of inf");
    return v;
  }
  return Value(Rational(v.q_ * n));
}

bool operator==(const Value& a, const Value& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.q_ == b.q_;
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
  if (a.infinite_) return std::strong_ordering::greater;
  if (b.infinite_) return std::strong_ordering::less;
  if (a.q_ < b.q_) return std::strong_ordering::less;
  if (b.q_ < a.q_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Value value_add(const Value& a, const Value& b) { return a + b; }
Value value_min(const Value& a, const Value& b) { return b < a ? b : a; }
Value value_max(const Value& a, const Value& b) { return a < b ? b : a; }
std::strong_ordering value_cmp(const Value& a, const Value& b) { return a <=> b; }

Value parse_value(std::string_view text) {
  if (text == "inf" || text == "∞") return Value::infinity();
  return Value(parse_rational(text));
}

ValueGroupSpec::ValueGroupSpec(std::int64_t n, std::int64_t p, int depth)
    : n_(n), p_(p), depth_(depth) {
  if (n < 1) throw SpecError("lattice N must be positive");
  if (p != 0) {
    if (!is_prime(p)) throw SpecError("lattice p must be prime");
    if (std::gcd(n, p) != 1) throw SpecError("lattice requires gcd(N, p) = 1");
    if (depth < 0) throw SpecError("lattice depth must be non-negative");
  }
  denom_ = n;
  for (int i = 0; i < depth_; ++i) {
    if (denom_ > (std::int64_t{1} << 40) / (p_ > 0 ? p_ : 1)) throw SpecError("lattice denominator too large");
    denom_ *= p_;
  }
}

ValueGroupSpec ValueGroupSpec::lattice(std::int64_t n) { return ValueGroupSpec(n, 0, 0); }

ValueGroupSpec ValueGroupSpec::p_rooted(std::int64_t n, std::int64_t p, int depth) {
  return ValueGroupSpec(n, p, depth);
}

bool ValueGroupSpec::contains(const Value& v) const {
  if (v.is_infinite()) throw DomainError("membership of inf in a value group is undefined");
  const BigInt& den = boost::multiprecision::denominator(v.rational());
  return BigInt(denom_) % den == 0;
}

bool ValueGroupSpec::is_subgroup_of(const ValueGroupSpec& other) const noexcept {
  return other.denom_ % denom_ == 0;
}

std::string ValueGroupSpec::to_string() const {
  if (!is_p_rooted()) return "(1/" + std::to_string(n_) + ")Z";
  return "(1/(" + std::to_string(n_) + "*" + std::to_string(p_) + "^" + std::to_string(depth_) + "))Z";
}

bool contains(const ValueGroupSpec& spec, const Value& v) { return spec.contains(v); }

std::string PDivisibility::to_string() const {
  if (kind == Kind::No) return "false";
  return "approximately(depth=" + std::to_string(depth) + ")";
}

PDivisibility is_p_divisible(const ValueGroupSpec& spec, std::int64_t p) {
  if (spec.is_p_rooted() && spec.p() == p) return {PDivisibility::Kind::Approximately, spec.depth()};
  return {PDivisibility::Kind::No, 0};
}

std::optional<Value> divide_value(const Value& v, std::int64_t n, const ValueGroupSpec& spec) {
  if (v.is_infinite()) throw DomainError("divide_value requires a finite value");
  if (n < 1) throw DomainError("divide_value requires a positive divisor");
  Value q(Rational(v.rational() / n));
  if (!spec.contains(q)) return std::nullopt;
  return q;
}

std::optional<std::int64_t> torsion_order(const Value& v, const ValueGroupSpec& sub,
                                          const ValueGroupSpec& sup) {
  if (!sub.is_subgroup_of(sup)) throw SpecError("torsion_order: sub is not contained in sup");
  if (!sup.contains(v)) return std::nullopt;
  // n·(a/b) ∈ (1/D)Z  <=>  b | n·D  <=>  b / gcd(b, D) divides n.
  const std::int64_t b = static_cast<std::int64_t>(boost::multiprecision::denominator(v.rational()));
  return b / std::gcd(b, sub.denominator());
}

}  // namespace valrv
