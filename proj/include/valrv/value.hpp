#pragma once

// Valuation values (Q together with a maximal element "inf") and the
// rank-one value groups the concrete field models live on.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace valrv {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// Renders q as "n" or "n/d" (reduced, positive denominator).
std::string rational_to_string(const Rational& q);

/// Parses "n", "-n", "n/d". Throws ParseError on malformed input.
Rational parse_rational(std::string_view text);

bool is_prime(std::int64_t n);
std::int64_t ipow(std::int64_t base, int exp);

/// An element of Q ∪ {∞}. Finite values are exact rationals in lowest terms;
/// ∞ is absorbing for addition and larger than every finite value.
class Value {
 public:
  Value() = default;
  Value(const Rational& q) : q_(q) {}  // NOLINT: implicit by design of the arithmetic
  Value(std::int64_t n) : q_(n) {}     // NOLINT
  Value(int n) : q_(n) {}              // NOLINT

  static Value infinity() {
    Value v;
    v.infinite_ = true;
    return v;
  }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }

  /// The rational behind a finite value; throws DomainError on ∞.
  const Rational& rational() const;

  std::string to_string() const;

  friend Value operator+(const Value& a, const Value& b);
  friend Value operator-(const Value& a, const Value& b);  // b must be finite
  friend Value operator-(const Value& a);                   // a must be finite
  friend Value operator*(std::int64_t n, const Value& v);   // n > 0 for ∞
  friend bool operator==(const Value& a, const Value& b);
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

 private:
  bool infinite_ = false;
  Rational q_{0};
};

Value value_add(const Value& a, const Value& b);
Value value_min(const Value& a, const Value& b);
Value value_max(const Value& a, const Value& b);
std::strong_ordering value_cmp(const Value& a, const Value& b);

/// Parses a rendered value: "inf" or a rational.
Value parse_value(std::string_view text);

/// A rank-one value group Γ ⊂ Q:
///   lattice(N)            Γ = (1/N)·Z
///   p_rooted(N, p, depth) Γ = (1/(N·p^depth))·Z, gcd(N, p) = 1, a finite-depth
///                         stand-in for (1/N)·Z[1/p].
class ValueGroupSpec {
 public:
  static ValueGroupSpec lattice(std::int64_t n);
  static ValueGroupSpec p_rooted(std::int64_t n, std::int64_t p, int depth);

  bool is_p_rooted() const noexcept { return p_ != 0; }
  std::int64_t n() const noexcept { return n_; }
  std::int64_t p() const noexcept { return p_; }
  int depth() const noexcept { return depth_; }

  /// Γ = (1 / denominator())·Z.
  std::int64_t denominator() const noexcept { return denom_; }

  /// Throws DomainError on ∞.
  bool contains(const Value& v) const;
  bool is_subgroup_of(const ValueGroupSpec& other) const noexcept;

  std::string to_string() const;

  friend bool operator==(const ValueGroupSpec&, const ValueGroupSpec&) = default;

 private:
  ValueGroupSpec(std::int64_t n, std::int64_t p, int depth);

  std::int64_t n_ = 1;
  std::int64_t p_ = 0;
  int depth_ = 0;
  std::int64_t denom_ = 1;
};

bool contains(const ValueGroupSpec& spec, const Value& v);

/// p-divisibility of a value group. Truncated hulls can only ever be
/// approximately p-divisible, so "yes" is never reported unconditionally.
struct PDivisibility {
  enum class Kind { No, Approximately };
  Kind kind = Kind::No;
  int depth = 0;  // meaningful for Approximately

  std::string to_string() const;
};

PDivisibility is_p_divisible(const ValueGroupSpec& spec, std::int64_t p);

/// v / n when it lies in Γ.
std::optional<Value> divide_value(const Value& v, std::int64_t n, const ValueGroupSpec& spec);

/// Least n >= 1 with n·v in `sub`. For the lattice variants such an n always
/// exists (Γ_sup / Γ_sub is finite cyclic), so the optional is empty only if
/// v is not in `sup`. Throws SpecError when sub is not a subgroup of sup.
std::optional<std::int64_t> torsion_order(const Value& v, const ValueGroupSpec& sub,
                                          const ValueGroupSpec& sup);

}  // namespace valrv
