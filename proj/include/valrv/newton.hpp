#pragma once

// Polynomials over the concrete valued fields: Newton polygons, Hensel
// lifting, n-th roots of 1-units and tame Newton–Puiseux root finding.

#include <optional>
#include <string>
#include <vector>

#include "valrv/field.hpp"

namespace valrv {

/// Dense polynomial c_0 + c_1 X + ... + c_n X^n. Trailing exact zeros are
/// dropped, so the degree is that of the last coefficient not known to vanish.
class Poly {
 public:
  Poly() = default;
  Poly(FieldSpec spec, std::vector<FieldElem> coeffs);
  static Poly monomial_x(const FieldSpec& spec, int k);

  const FieldSpec& spec() const noexcept { return spec_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<FieldElem>& coeffs() const noexcept { return coeffs_; }
  FieldElem coeff(int i) const;

  FieldElem operator()(const FieldElem& x) const;
  Poly derivative() const;
  /// g(W) = f(a + W).
  Poly taylor_shift(const FieldElem& a) const;

  std::string to_string() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  FieldSpec spec_;
  std::vector<FieldElem> coeffs_;
};

struct PolygonVertex {
  int index = 0;
  Value value;
};

/// A hull edge. Roots attached to it have valuation -slope.
struct PolygonSegment {
  int start = 0;
  int end = 0;
  Rational slope;
  int length = 0;
  /// Σ lc(c_k) Y^(k - start) over the points (k, v c_k) lying on the edge.
  ResPoly residual;
};

struct NewtonPolygon {
  std::vector<PolygonVertex> vertices;
  std::vector<PolygonSegment> segments;
  int lowest_index = 0;

  std::string to_string() const;
};

/// IndeterminateValuation if a coefficient vanishes only at precision.
NewtonPolygon newton_polygon(const Poly& f);

/// Coefficient-wise residue (NotIntegral on a negative-valuation coefficient).
ResPoly reduce_poly(const Poly& f);

struct HenselResult {
  FieldElem root;
  /// Lower bound for v(f(root)); ∞ for an exact root.
  Value achieved;
};

/// Newton iteration from b under v f(b) > 2 v f'(b) (DomainError otherwise).
/// Stops once v f(z) >= target or the coefficient precision is used up; the
/// precision actually reached is reported, never exceeded.
HenselResult hensel_lift_ex(const Poly& f, const FieldElem& b, const Value& target);

/// As hensel_lift_ex, but InsufficientPrecision when target is not reached.
FieldElem hensel_lift(const Poly& f, const FieldElem& b, const Value& target);

/// The z with z^n = u and v(z - 1) > 0, for p ∤ n. The target defaults to the
/// precision of u (or the spec's default precision when u is exact).
FieldElem nth_root_near_one(const FieldElem& u, std::int64_t n, std::optional<Value> target = std::nullopt);

enum class Completeness { Complete, IncompleteWild, IncompletePrecision };
std::string to_string(Completeness c);

struct FieldRoot {
  FieldElem root;
  int multiplicity = 1;
  Value achieved;
  /// Slope of the top-level segment the root came from (absent for the root 0).
  std::optional<Rational> segment_slope;
};

/// A point visited by the root search: f(center) has valuation value.
struct SearchCandidate {
  FieldElem center;
  Value value;
};

struct RootAnalysis {
  std::vector<FieldRoot> roots;
  Completeness completeness = Completeness::Complete;
  /// Why each branch was closed; the basis of polygon certificates.
  std::vector<std::string> notes;
  /// Centers of the explored discs. With Complete and no roots,
  /// max over these of value = max over all z in the region of v f(z).
  std::vector<SearchCandidate> candidates;
};

struct RootSearchOptions {
  int budget = 4;
  /// Absolute precision for lifted roots; defaults to the spec's default.
  std::optional<Value> target;
};

/// Roots z = center + w of f with v(w) > bound (all w when bound is empty).
RootAnalysis analyze_roots(const Poly& f, const FieldElem& center, const std::optional<Value>& bound,
                           const RootSearchOptions& options = {});

RootAnalysis roots_in_field(const Poly& f, int budget = 4);

}  // namespace valrv
