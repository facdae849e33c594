#include "valrv/rv.hpp"

#include "valrv/errors.hpp"

namespace valrv {

RvElem::RvElem(Value value, ResidueElem unit) : infinite_(false), value_(std::move(value)), unit_(std::move(unit)) {
  if (value_.is_infinite()) throw DomainError("finite RV element needs a finite value");
  if (!unit_.field() || unit_.is_zero()) throw DomainError("RV unit must be a nonzero residue");
}

const ResidueElem& RvElem::unit() const {
  if (infinite_) throw DomainError("the RV element inf has no unit");
  return unit_;
}

std::string RvElem::to_string() const {
  if (infinite_) return "inf";
  return "(" + value_.to_string() + ", " + unit_.to_string() + ")";
}

bool operator==(const RvElem& a, const RvElem& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_ && a.unit_ == b.unit_;
}

RvElem rv_of(const FieldElem& a) {
  if (a.is_exact_zero()) return RvElem::infinity();
  if (a.is_zero_at_precision())
    throw InsufficientPrecision("leading term not determined below precision " + a.precision().to_string());
  return RvElem(a.valuation(), a.leading_coeff());
}

RvElem rv_mul(const RvElem& r, const RvElem& s) {
  if (r.is_infinite() || s.is_infinite()) return RvElem::infinity();
  return RvElem(r.value() + s.value(), r.unit() * s.unit());
}

RvElem rv_inv(const RvElem& r) {
  if (r.is_infinite()) throw DomainError("inverse of the RV element inf");
  return RvElem(-r.value(), r.unit().inverse());
}

RvElem rv_one(const ResidueFieldPtr& field) { return RvElem(Value(0), field->one()); }

RvElem rv_pow(const RvElem& r, std::int64_t n) {
  if (r.is_infinite()) {
    if (n <= 0) throw DomainError("non-positive power of the RV element inf");
    return r;
  }
  return RvElem(Value(Rational(r.value().rational() * n)), r.unit().pow(n));
}

Value v_rv(const RvElem& r) { return r.value(); }

RvElem iota(const ResidueElem& u) { return RvElem(Value(0), u); }

ResidueElem residue_of(const RvElem& r) {
  if (r.is_infinite() || r.value() != Value(0)) throw DomainError("residue_of needs v_rv = 0");
  return r.unit();
}

Value value_of(const RvElem& r) { return r.value(); }

std::string RvSumResult::to_string() const {
  if (kind == Kind::Definite) return "Definite(" + definite.to_string() + ")";
  return "AnyAbove(" + gamma.to_string() + ")";
}

RvSumResult rv_sum(const std::vector<RvElem>& rs) {
  if (rs.empty()) throw DomainError("rv_sum of an empty list");
  Value gamma = Value::infinity();
  for (const auto& r : rs) gamma = value_min(gamma, r.value());
  RvSumResult out;
  if (gamma.is_infinite()) return out;
  ResidueElem s;
  for (const auto& r : rs) {
    if (r.value() != gamma) continue;
    s = s.field() ? s + r.unit() : r.unit();
  }
  if (!s.is_zero()) {
    out.definite = RvElem(gamma, s);
    return out;
  }
  out.kind = RvSumResult::Kind::AnyAbove;
  out.gamma = gamma;
  return out;
}

bool holds_oplus(const std::vector<RvElem>& rs, const RvElem& z) {
  const RvSumResult s = rv_sum(rs);
  if (s.kind == RvSumResult::Kind::Definite) return s.definite == z;
  return z.value() > s.gamma;
}

bool rv_eq_criterion(const FieldElem& a, const FieldElem& b) {
  if (a.is_exact_zero()) return b.is_exact_zero();
  if (a.is_zero_at_precision()) throw InsufficientPrecision("leading term of the first argument is not determined");
  const Value va = a.valuation();
  const FieldElem d = a - b;
  if (d.is_zero_at_precision()) {
    if (d.precision() > va) return true;
    throw InsufficientPrecision("difference vanishes only below the valuation");
  }
  return d.valuation() > va;
}

}  // namespace valrv
