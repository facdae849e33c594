#pragma once

// Concrete valued fields:
//   Series  truncated generalized power series Kv((t^Γ)), equal characteristic
//   Padic   Q_p(π) with π^e = p, gcd(e, p) = 1, digits in {0..p-1} at π^i
// Elements carry an absolute precision (∞ = exact).

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "valrv/residue.hpp"
#include "valrv/value.hpp"

namespace valrv {

class FieldSpec {
 public:
  enum class Model { Series, Padic };

  FieldSpec() = default;
  static FieldSpec series(ResidueFieldPtr residue, ValueGroupSpec lattice, Value default_precision = Value(8));
  static FieldSpec padic(std::int64_t p, std::int64_t e, std::int64_t digits);

  bool valid() const noexcept { return d_ != nullptr; }
  Model model() const { return data().model; }
  bool is_series() const { return data().model == Model::Series; }
  bool is_padic() const { return data().model == Model::Padic; }
  const ResidueFieldPtr& residue() const { return data().residue; }
  const ValueGroupSpec& lattice() const { return data().lattice; }
  /// Residue characteristic (0 for Q).
  std::int64_t p() const { return data().residue->characteristic(); }
  /// Ramification index for Padic, 1 for Series.
  std::int64_t e() const { return data().e; }
  std::int64_t digits() const { return data().digits; }
  /// Series: the configured default precision. Padic: digits/e.
  const Value& default_precision() const { return data().default_precision; }

  std::string to_string() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b);

 private:
  struct Data {
    Model model = Model::Series;
    ResidueFieldPtr residue;
    ValueGroupSpec lattice = ValueGroupSpec::lattice(1);
    Value default_precision;
    std::int64_t e = 1;
    std::int64_t digits = 0;
  };
  const Data& data() const;

  std::shared_ptr<const Data> d_;
};

struct Term {
  Rational exp;
  ResidueElem coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

enum class Tri { False, True, Indeterminate };
std::string to_string(Tri t);

class FieldElem {
 public:
  FieldElem() = default;
  /// Normalizes: merges equal exponents, drops zeros and anything at or past
  /// the precision; Padic digit strings are carried into {0..p-1}. Exponents
  /// must lie in the lattice (LatticeError).
  FieldElem(FieldSpec spec, std::vector<Term> terms, Value precision = Value::infinity());

  static FieldElem zero(const FieldSpec& spec);
  static FieldElem one(const FieldSpec& spec);
  static FieldElem from_integer(const FieldSpec& spec, const BigInt& n);
  static FieldElem from_rational(const FieldSpec& spec, const Rational& q);
  /// Zero known only up to `precision`.
  static FieldElem big_o(const FieldSpec& spec, const Value& precision);

  const FieldSpec& spec() const noexcept { return spec_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const Value& precision() const noexcept { return prec_; }

  bool is_exact() const noexcept { return prec_.is_infinite(); }
  bool is_exact_zero() const noexcept { return terms_.empty() && prec_.is_infinite(); }
  /// No terms below the precision (exact zero included).
  bool is_zero_at_precision() const noexcept { return terms_.empty(); }

  /// Leading exponent; ∞ for exact zero; IndeterminateValuation if all terms
  /// cancelled below a finite precision.
  Value valuation() const;
  /// Leading exponent, or the precision when no terms are known.
  Value valuation_lower_bound() const;
  ResidueElem leading_coeff() const;
  ResidueElem coeff_at(const Rational& exp) const;

  FieldElem inverse() const;
  FieldElem pow(std::int64_t n) const;
  /// Same terms with the precision lowered to min(precision, prec).
  FieldElem truncated(const Value& prec) const;

  /// Grammar-compatible rendering, e.g. "2*t^-1 + 1 + O(t^3)" or "1 + 2*pi^2".
  std::string to_string() const;

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  /// Structural equality: same spec, terms and precision.
  friend bool operator==(const FieldElem& a, const FieldElem& b);

 private:
  void normalize_series();
  void normalize_padic(std::vector<std::pair<std::int64_t, BigInt>> raw);
  static FieldElem padic_from_raw(const FieldSpec& spec, std::vector<std::pair<std::int64_t, BigInt>> raw,
                                  const Value& precision);
  friend FieldElem padic_combine(const FieldElem& a, const FieldElem& b, int sign);
  friend FieldElem series_combine(const FieldElem& a, const FieldElem& b, bool subtract);
  friend FieldElem series_multiply(const FieldElem& a, const FieldElem& b, const Value& prec);

  FieldSpec spec_;
  std::vector<Term> terms_;
  Value prec_ = Value::infinity();
};

Value valuation(const FieldElem& a);
/// Image in Kv. NotIntegral if v(a) < 0; InsufficientPrecision if precision <= 0.
ResidueElem residue(const FieldElem& a);
/// The b with b^p = a (Series, char p > 0); none when an exponent leaves Γ.
std::optional<FieldElem> pth_root(const FieldElem& a);
/// Constant term r (Series) or digit r at π^0 (Padic); exact.
FieldElem lift_residue(const ResidueElem& r, const FieldSpec& spec);
/// coeff · t^exp (Series) or digit · π^(exp·e) (Padic). LatticeError off Γ.
FieldElem monomial(const ResidueElem& coeff, const Value& exp, const FieldSpec& spec);
FieldElem truncate(const FieldElem& a, const Value& prec);
Tri eq_at_precision(const FieldElem& a, const FieldElem& b);

/// Coefficient-wise map from K into a larger model F: exponents are kept,
/// residues pass through the embedding.
FieldElem map_into(const FieldElem& a, const FieldSpec& target, const ResidueEmbedding& emb);

/// Bounds for pseudorandom elements.
struct RandomShape {
  Rational lo{-2};
  Rational hi{2};
  int max_terms = 3;
  /// Absolute precision of the sample; ∞ gives exact elements.
  Value precision = Value::infinity();
  bool nonzero = true;
};

/// Exponents are drawn from the lattice points in [lo, hi].
FieldElem random_element(const FieldSpec& spec, std::mt19937_64& rng, const RandomShape& shape);

}  // namespace valrv
