#pragma once

// RV_K = K^x / (1 + m_K) together with ∞, in split (value, unit) form.

#include <string>
#include <vector>

#include "valrv/field.hpp"

namespace valrv {

class RvElem {
 public:
  RvElem() = default;  // ∞
  RvElem(Value value, ResidueElem unit);

  static RvElem infinity() { return RvElem(); }

  bool is_infinite() const noexcept { return infinite_; }
  const Value& value() const noexcept { return value_; }
  /// Throws DomainError on ∞.
  const ResidueElem& unit() const;

  /// "(1/2, 2*u+1)" or "inf".
  std::string to_string() const;

  friend bool operator==(const RvElem& a, const RvElem& b);

 private:
  bool infinite_ = true;
  Value value_ = Value::infinity();
  ResidueElem unit_;
};

RvElem rv_of(const FieldElem& a);
RvElem rv_mul(const RvElem& r, const RvElem& s);
RvElem rv_inv(const RvElem& r);
RvElem rv_one(const ResidueFieldPtr& field);
RvElem rv_pow(const RvElem& r, std::int64_t n);
Value v_rv(const RvElem& r);

RvElem iota(const ResidueElem& u);
/// Inverse of iota on v_rv = 0; DomainError elsewhere.
ResidueElem residue_of(const RvElem& r);
Value value_of(const RvElem& r);

struct RvSumResult {
  enum class Kind { Definite, AnyAbove };
  Kind kind = Kind::Definite;
  RvElem definite;  // Kind::Definite
  Value gamma;      // Kind::AnyAbove: the relation holds for exactly v_rv(z) > gamma

  std::string to_string() const;
};

/// Closed form of { z : ⊕(rs, z) }. rs must be nonempty.
RvSumResult rv_sum(const std::vector<RvElem>& rs);
bool holds_oplus(const std::vector<RvElem>& rs, const RvElem& z);

/// v(a - b) > v(a); equivalent to rv_of(a) == rv_of(b).
bool rv_eq_criterion(const FieldElem& a, const FieldElem& b);

}  // namespace valrv
