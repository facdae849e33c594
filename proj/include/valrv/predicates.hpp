#pragma once

// Checkers for the tameness predicates A, A', H_n, E_n, E'_n and a sampled
// tameness profile of a truncated field model.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "valrv/newton.hpp"
#include "valrv/rv.hpp"

namespace valrv {

enum class VerdictKind { Holds, Fails, Unknown };
std::string to_string(VerdictKind k);

using WitnessValue = std::variant<FieldElem, ResidueElem, Value>;

struct Witness {
  std::string name;
  WitnessValue value;
};

/// One step a_k -> a_{k+1} = a_k + r_k^(1/p) of the Artin–Schreier iteration,
/// with r_k = c + a_k - a_k^p.
struct ASStep {
  FieldElem a;
  FieldElem residual;
  /// v(r_k), or its lower bound when r_k vanishes at precision.
  Value value;
};

struct ASIterationTrace {
  std::vector<ASStep> steps;
};

struct PredicateVerdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::vector<Witness> witnesses;
  /// For Fails: "value-group", "residue", "polygon", ...
  std::string certificate_kind;
  std::vector<std::string> certificate;
  std::string diagnostic;
  std::optional<ASIterationTrace> trace;
  /// check_E / check_E': the reported maximum is proven, not just observed.
  bool certified = false;

  const WitnessValue* find(const std::string& name) const;
};

/// Bounded element grid for the extremality checks.
struct SearchSpace {
  Rational lo{-2};
  Rational hi{2};
  /// Exponents k/d with d <= denominator_bound (and k/d in Γ).
  std::int64_t denominator_bound = 1;
  int max_terms = 2;
  /// Number of nonzero residues used as coefficients (0 = all of F_q; for Q
  /// the integers ±1..±2).
  int coefficient_range = 0;
};

/// Every element of the grid, zero first, in a fixed order.
std::vector<FieldElem> enumerate_search_space(const FieldSpec& spec, const SearchSpace& space);

/// H_n: ∃z with v(y - z) > 0 and z^n + x_1 z^(n-1) + ... + x_n = 0.
PredicateVerdict check_H(int n, const std::vector<FieldElem>& x, const FieldElem& y, int budget = 4);

/// A: ∃η, d with η^p - η - c - d = 0 and (d = 0 or v(d) = 0). Series, char p.
/// budget <= 0 selects the default (lattice depth + 4).
PredicateVerdict check_A(const FieldElem& c, int budget = 0);

/// A': ∃b with v(a - b^p) > v(a).
PredicateVerdict check_A_prime(const FieldElem& a);

/// Extremality for b_0 + Σ_{i=1}^n b_i X^(p^(i-1)).
PredicateVerdict check_E(int n, const std::vector<FieldElem>& b, const SearchSpace& space = {}, int budget = 4);

/// Extremality for Σ_{i=0}^n b_i X^i.
PredicateVerdict check_E_prime(int n, const std::vector<FieldElem>& b, const SearchSpace& space = {}, int budget = 4);

/// Shared extremality search for an arbitrary one-variable polynomial.
PredicateVerdict check_extremal(const Poly& f, const SearchSpace& space, int budget = 4);

/// v f(z), with a vanishing-at-precision value reported as its lower bound.
Value value_of_poly_at(const Poly& f, const FieldElem& z);

struct RateCount {
  int samples = 0;
  int holds = 0;
  int fails = 0;
  int unknown = 0;
};

struct TamenessProfile {
  std::string field;
  int depth = 0;
  std::string label;
  std::string p_divisible;
  std::string residue_perfect;
  bool p_predicates_applicable = false;
  std::string inapplicable_reason;
  RateCount a_prime;
  std::vector<std::string> a_prime_failures;
  RateCount a;
  RateCount h;
};

TamenessProfile tameness_profile(const FieldSpec& spec, int samples, std::uint64_t seed);

}  // namespace valrv
